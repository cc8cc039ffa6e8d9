#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "okbody.h"

using Json = nlohmann::ordered_json;

namespace {

const char* kConicToml = R"(
[model]
type = "projective"
n = 2
d = 2

[flag]
variant = "curve"
xi1 = "z0 z2 - z1^2"
param = ["u^2", "u t", "t^2"]
)";

const char* kToricJson = R"({
  "model": {"type": "toric", "vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]},
  "flag": {"variant": "toric_vertex", "vertex": [0, 0], "edges": [[1, 0], [0, 1]]}
})";

// RAII over the C handle so failed REQUIREs cannot leak sessions.
struct Session {
    okb_session* s = nullptr;

    explicit Session(const char* text, const char* format = "auto") {
        char* err = nullptr;
        okb_status st = okb_session_open(text, format, &s, &err);
        if (st != OKB_OK) {
            std::string msg = err ? err : "(no message)";
            okb_string_free(err);
            FAIL("session open failed: ", msg);
        }
    }
    ~Session() { okb_session_close(s); }
};

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    okb_string_free(s);
    return out;
}

Json take_json(char* s) { return Json::parse(take(s)); }

} // namespace

TEST_CASE("version and trivial lifetime calls") {
    CHECK(std::strcmp(okb_version(), "1.0.0") == 0);
    okb_string_free(nullptr);
    okb_session_close(nullptr);
}

TEST_CASE("null arguments are usage errors") {
    char* out = nullptr;
    char* err = nullptr;
    CHECK(okb_session_open(nullptr, "auto", nullptr, &err) == OKB_ERR_USAGE);
    CHECK(take(err).find("null argument") != std::string::npos);

    Session s(kConicToml);
    CHECK(okb_body(nullptr, 1, &out, nullptr) == OKB_ERR_USAGE);
    CHECK(okb_body(s.s, 1, nullptr, nullptr) == OKB_ERR_USAGE);
    err = nullptr;
    CHECK(okb_decompose(s.s, nullptr, 2, 1, &out, &err) == OKB_ERR_USAGE);
    take(err);
    err = nullptr;
    CHECK(okb_lemma_witness(s.s, nullptr, 64, &out, &err) == OKB_ERR_USAGE);
    take(err);
}

TEST_CASE("malformed configuration text") {
    okb_session* s = nullptr;
    char* err = nullptr;
    CHECK(okb_session_open("[model\n", "toml", &s, &err) == OKB_ERR_CONFIG);
    CHECK(s == nullptr);
    CHECK(take(err).find("config parse error") != std::string::npos);

    err = nullptr;
    CHECK(okb_session_open("{ nope", "json", &s, &err) == OKB_ERR_CONFIG);
    CHECK(take(err).find("not valid JSON") != std::string::npos);

    // validation failures also surface as config errors at open time
    err = nullptr;
    const char* bad = R"({
      "model": {"type": "projective", "n": 2, "d": 1},
      "flag": {"variant": "coordinate", "order": [0, 1, 1]}
    })";
    CHECK(okb_session_open(bad, "auto", &s, &err) == OKB_ERR_CONFIG);
    CHECK(take(err).find("order_is_permutation") != std::string::npos);
}

TEST_CASE("conic session end to end") {
    Session s(kConicToml);
    char* out = nullptr;
    char* err = nullptr;

    REQUIRE(okb_validation_report(s.s, &out, &err) == OKB_OK);
    Json report = take_json(out);
    CHECK(report["ok"] == true);
    CHECK(report["flag_kind"] == "curve");

    out = nullptr;
    REQUIRE(okb_body(s.s, 1, &out, &err) == OKB_OK);
    Json body = take_json(out);
    CHECK(body["max_level"] == 1);
    CHECK(body["body"]["vertices"] ==
          Json::array({Json::array({"0", "0"}), Json::array({"0", "1"}),
                       Json::array({"4", "0"})}));
    CHECK(body["sample"]["levels"]["1"].size() == 6);

    out = nullptr;
    REQUIRE(okb_verify_theorem(s.s, 2, &out, &err) == OKB_OK);
    Json verdict = take_json(out);
    CHECK(verdict["K"] == 2);
    CHECK(verdict["b"] == 4);
    CHECK(verdict["contained"] == true);
    CHECK(verdict["equal"] == true);
    CHECK(verdict["e1_gap"] == "0");

    long long a[2] = {3, 0};
    out = nullptr;
    REQUIRE(okb_decompose(s.s, a, 2, 1, &out, &err) == OKB_OK);
    Json dec = take_json(out);
    CHECK(dec["coefficients"] == Json::array({"1/4", "3/4", "0"}));

    // outside the simplex: config status plus the structured message
    long long outside[2] = {5, 0};
    out = nullptr;
    err = nullptr;
    CHECK(okb_decompose(s.s, outside, 2, 1, &out, &err) == OKB_ERR_CONFIG);
    CHECK(take(err).find("point outside predicted simplex") != std::string::npos);

    out = nullptr;
    err = nullptr;
    REQUIRE(okb_lemma_witness(s.s, "7/2", 64, &out, &err) == OKB_OK);
    Json wit = take_json(out);
    CHECK(wit["m"] == 3);
    CHECK(wit["v1"] == 11);
    CHECK(wit["N"] == 1);
    CHECK(wit["section"] == "z1 z2^5");

    out = nullptr;
    REQUIRE(okb_scaling_check(s.s, 2, 1, &out, &err) == OKB_OK);
    CHECK(take_json(out)["equal"] == true);

    out = nullptr;
    REQUIRE(okb_volume_table(s.s, 5, 1, 0, &out, &err) == OKB_OK);
    std::string csv = take(out);
    CHECK(csv.substr(0, csv.find('\n')) == "k,dim_over_k_n,volume");
    CHECK(csv.find("\n5,66/25,2\n") != std::string::npos);

    out = nullptr;
    REQUIRE(okb_volume_table(s.s, 2, 0, 1, &out, &err) == OKB_OK);
    Json table = take_json(out);
    CHECK(table["rows"][1]["volume_decimal"] == "2.000000");

    out = nullptr;
    REQUIRE(okb_axiom_check(s.s, 200, 12345, 2, &out, &err) == OKB_OK);
    Json axioms = take_json(out);
    CHECK(axioms["violations"] == Json::array());
    CHECK(axioms["products_checked"] == 200);
}

TEST_CASE("status codes follow the error taxonomy") {
    Session toric(kToricJson);
    char* out = nullptr;
    char* err = nullptr;

    // the toric flag is outside the theorem's distinguished shape
    CHECK(okb_verify_theorem(toric.s, 1, &out, &err) == OKB_ERR_HYPOTHESIS);
    CHECK(take(err).find("distinguished shape") != std::string::npos);

    // but direct body computation works fine
    out = nullptr;
    REQUIRE(okb_body(toric.s, 1, &out, nullptr) == OKB_OK);
    Json body = take_json(out);
    CHECK(body["body"]["vertices"].size() == 4);

    // bad levels are config errors
    out = nullptr;
    err = nullptr;
    CHECK(okb_body(toric.s, 0, &out, &err) == OKB_ERR_CONFIG);
    take(err);

    Session conic(kConicToml);
    out = nullptr;
    err = nullptr;
    CHECK(okb_lemma_witness(conic.s, "9/2", 64, &out, &err) == OKB_ERR_CONFIG);
    CHECK(take(err).find("open interval") != std::string::npos);

    out = nullptr;
    err = nullptr;
    CHECK(okb_lemma_witness(conic.s, "not-a-number", 64, &out, &err) == OKB_ERR_CONFIG);
    take(err);
}
