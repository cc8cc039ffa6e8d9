#include <doctest.h>

#include <string>

#include "okbody/config.hpp"

using namespace okb;

namespace {

const char* kConicToml = R"(# conic curve flag on the plane
[model]
type = "projective"
n = 2
d = 2

[flag]
variant = "curve"
xi1 = "z0 z2 - z1^2"
param = ["u^2", "u t", "t^2"]
)";

const char* kConicJson = R"({
  "model": {"type": "projective", "n": 2, "d": 2},
  "flag": {"variant": "curve", "xi1": "z0 z2 - z1^2", "param": ["u^2", "u t", "t^2"]}
})";

std::string config_error(const std::string& text) {
    try {
        load_run_config_text(text, "auto");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Config);
        return e.what();
    }
    FAIL("expected a config error");
    return "";
}

} // namespace

TEST_CASE("toml subset parses sections, scalars, and arrays") {
    Json doc = toml_to_json(R"(
# leading comment
[model]
type = "projective"   # trailing comment
n = 2
d = -3

[flag]
happy = true
sad = false
order = [0, 1, 2,]
empty = []
text = "a\"b\\c"
)");
    CHECK(doc["model"]["type"] == "projective");
    CHECK(doc["model"]["n"] == 2);
    CHECK(doc["model"]["d"] == -3);
    CHECK(doc["flag"]["happy"] == true);
    CHECK(doc["flag"]["sad"] == false);
    CHECK(doc["flag"]["order"] == Json::array({0, 1, 2}));
    CHECK(doc["flag"]["empty"] == Json::array());
    CHECK(doc["flag"]["text"] == "a\"b\\c");

    // arrays may nest and spread over lines, with trailing commas
    Json toric = toml_to_json(R"(
[model]
type = "toric"
vertices = [
    [0, 0],
    [1, 0],
    [0, 1],
]
)");
    CHECK(toric["model"]["vertices"] ==
          Json::array({Json::array({0, 0}), Json::array({1, 0}), Json::array({0, 1})}));
}

TEST_CASE("toml subset rejects malformed input with located errors") {
    CHECK_THROWS_WITH_AS(toml_to_json("[model]\n[model]\nn = 1\n"),
                         "duplicate config section [model]", Error);
    CHECK_THROWS_WITH_AS(toml_to_json("[model]\nn = 1\nn = 2\n"),
                         "duplicate config key 'n'", Error);
    CHECK_THROWS_WITH_AS(toml_to_json("n = 1\n[model]\n"),
                         "config key 'n' appears before any [section]", Error);
    CHECK_THROWS_WITH_AS(toml_to_json("[a]\ns = \"abc"),
                         "config parse error: unterminated string", Error);
    CHECK_THROWS_WITH_AS(toml_to_json("[a]\ns = \"abc\nn = 1\n"),
                         "config parse error: unterminated string", Error);
    CHECK_THROWS_WITH_AS(toml_to_json("[a]\nx = yes\n"),
                         "config parse error: unexpected word 'yes'", Error);
    CHECK_THROWS_WITH_AS(toml_to_json("[a]\nx ="),
                         "config parse error: missing value at end of input", Error);

    auto message_of = [](const std::string& text) -> std::string {
        try {
            toml_to_json(text);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Config);
            return e.what();
        }
        FAIL("expected a parse error");
        return "";
    };
    CHECK(message_of("[a]\nx = @\n").find("unexpected character '@'") != std::string::npos);
    CHECK(message_of("[a]\nx = -\n").find("malformed number") != std::string::npos);
    CHECK(message_of("[a]\nx = 99999999999999999999999\n").find("integer out of range") !=
          std::string::npos);
    CHECK(message_of("[a]\nx = [1, 2\n").find("expected") != std::string::npos);
    CHECK(message_of("[model\ntype = \"toric\"\n").find("expected") != std::string::npos);
}

TEST_CASE("config text dispatch by format") {
    Json a = parse_config_text(kConicToml, "toml");
    Json b = parse_config_text(kConicJson, "json");
    CHECK(a == b);
    // auto-sniffing keys off the first non-space character
    CHECK(parse_config_text(kConicToml, "auto") == a);
    CHECK(parse_config_text(kConicJson, "auto") == a);
    CHECK(parse_config_text("  \n  { \"model\": {}, \"flag\": {} }", "auto").is_object());

    CHECK_THROWS_WITH_AS(parse_config_text("{ nope", "json"), "config is not valid JSON", Error);
    CHECK_THROWS_WITH_AS(parse_config_text(kConicToml, "yaml"),
                         "unknown config format 'yaml' (expected toml, json, or auto)", Error);
}

TEST_CASE("equivalent toml and json configs load to the same run") {
    RunConfig t = load_run_config_text(kConicToml, "auto");
    RunConfig j = load_run_config_text(kConicJson, "auto");
    CHECK(t.report.ok());
    CHECK(j.report.ok());
    CHECK(model_dim(t.model) == 2);
    CHECK(valuation_image(t.model, t.flag, 1) == valuation_image(j.model, j.flag, 1));
    CHECK(valuation_image(t.model, t.flag, 2) == valuation_image(j.model, j.flag, 2));

    const char* toric_toml = R"(
[model]
type = "toric"
vertices = [[0, 0], [1, 0], [0, 1], [1, 1]]

[flag]
variant = "toric_vertex"
vertex = [0, 0]
edges = [[1, 0], [0, 1]]
)";
    const char* toric_json = R"({
  "model": {"type": "toric", "vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]},
  "flag": {"variant": "toric_vertex", "vertex": [0, 0], "edges": [[1, 0], [0, 1]]}
})";
    RunConfig tt = load_run_config_text(toric_toml, "auto");
    RunConfig tj = load_run_config_text(toric_json, "auto");
    CHECK(tt.report.ok());
    CHECK(valuation_image(tt.model, tt.flag, 3) == valuation_image(tj.model, tj.flag, 3));

    const char* coord = R"(
[model]
type = "projective"
n = 3
d = 1

[flag]
variant = "coordinate"
order = [0, 1, 2, 3]
)";
    RunConfig c = load_run_config_text(coord, "auto");
    CHECK(c.report.flag_kind == "coordinate");
    CHECK(model_dim(c.model) == 3);
}

TEST_CASE("structural problems in the document are config errors") {
    CHECK(config_error(R"({"model": {"type": "projective", "n": 2, "d": 1}})")
              .find("config document is missing the key 'flag'") != std::string::npos);
    CHECK(config_error(R"({"model": {}, "flag": {}, "extra": 1})")
              .find("unknown key 'extra' in config document") != std::string::npos);
    CHECK(config_error(R"({"model": {"n": 2, "d": 1}, "flag": {}})")
              .find("[model] is missing the key 'type'") != std::string::npos);
    CHECK(config_error(R"({"model": {"type": "planar"}, "flag": {}})")
              .find("unknown model type 'planar' (expected projective or toric)") !=
          std::string::npos);
    CHECK(config_error(
              R"({"model": {"type": "projective", "n": 2, "d": 1, "vertices": []}, "flag": {}})")
              .find("unknown key 'vertices' in [model] (projective)") != std::string::npos);
    CHECK(config_error(R"({"model": {"type": "projective", "n": "2", "d": 1}, "flag": {}})")
              .find("model n must be an integer") != std::string::npos);
    CHECK(config_error(R"({"model": {"type": "projective", "n": 20000000, "d": 1}, "flag": {}})")
              .find("model n is out of range") != std::string::npos);
    CHECK(config_error(R"({"model": 5, "flag": {}})").find("[model] must be a table") !=
          std::string::npos);

    const std::string p2 = R"("model": {"type": "projective", "n": 2, "d": 1})";
    CHECK(config_error("{" + p2 + R"(, "flag": {"variant": "diagonal"}})")
              .find("unknown flag variant 'diagonal' (expected coordinate, curve, or "
                    "toric_vertex)") != std::string::npos);
    CHECK(config_error("{" + p2 + R"(, "flag": {"variant": "coordinate"}})")
              .find("[flag] is missing the key 'order'") != std::string::npos);
    CHECK(config_error("{" + p2 + R"(, "flag": {"variant": "coordinate", "order": "012"}})")
              .find("flag order must be an array of integers") != std::string::npos);

    const std::string conic = R"("model": {"type": "projective", "n": 2, "d": 2})";
    CHECK(config_error("{" + conic + R"(, "flag": {"variant": "curve", "xi1": "z0"}})")
              .find("[flag] is missing the key 'param'") != std::string::npos);
    CHECK(config_error(
              "{" + conic + R"(, "flag": {"variant": "curve", "xi1": "z0", "param": []}})")
              .find("flag param must be a nonempty array of polynomial strings") !=
          std::string::npos);
    CHECK(config_error(
              "{" + conic + R"(, "flag": {"variant": "curve", "xi1": "z0", "param": [7]}})")
              .find("flag param entry must be a string") != std::string::npos);
    // polynomial text is parsed against the model's ambient variables
    CHECK_THROWS_AS(load_run_config_text(
                        "{" + conic +
                            R"(, "flag": {"variant": "curve", "xi1": "z0 z9", "param": ["u"]}})",
                        "auto"),
                    Error);
}

TEST_CASE("failed flag validation surfaces the report") {
    std::string msg = config_error(R"({
      "model": {"type": "projective", "n": 2, "d": 1},
      "flag": {"variant": "coordinate", "order": [0, 1, 1]}
    })");
    CHECK(msg.find("flag validation failed") != std::string::npos);
    CHECK(msg.find("order_is_permutation") != std::string::npos);

    // toric flag whose first edge is a diagonal fails the face-flag check
    std::string toric = config_error(R"({
      "model": {"type": "toric", "vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]},
      "flag": {"variant": "toric_vertex", "vertex": [0, 0], "edges": [[1, 1], [0, 1]]}
    })");
    CHECK(toric.find("edges_span_face_flag") != std::string::npos);
}
