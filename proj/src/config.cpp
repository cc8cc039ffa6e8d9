#include "okbody/config.hpp"

#include <cctype>
#include <set>

namespace okb {

namespace {

// Tokenizer for the TOML subset. Newlines are plain whitespace: the grammar
// stays unambiguous because '[' opens a section exactly when a statement is
// expected and an array exactly when a value is expected.
struct TomlScanner {
    std::string_view text;
    size_t pos = 0;

    void skip_space() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
    }

    bool done() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return text[pos];
    }

    void expect(char c, const std::string& what) {
        skip_space();
        if (pos >= text.size() || text[pos] != c) {
            fail_config("config parse error at offset " + std::to_string(pos) + ": expected " + what);
        }
        ++pos;
    }

    std::string bare_key() {
        skip_space();
        size_t start = pos;
        while (pos < text.size()) {
            char c = text[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
                ++pos;
            } else {
                break;
            }
        }
        if (pos == start) {
            fail_config("config parse error at offset " + std::to_string(pos) + ": expected a key");
        }
        return std::string(text.substr(start, pos - start));
    }

    Json value() {
        skip_space();
        if (pos >= text.size()) fail_config("config parse error: missing value at end of input");
        char c = text[pos];
        if (c == '[') {
            ++pos;
            Json arr = Json::array();
            skip_space();
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                return arr;
            }
            for (;;) {
                arr.push_back(value());
                skip_space();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    skip_space();
                    if (pos < text.size() && text[pos] == ']') { // trailing comma
                        ++pos;
                        return arr;
                    }
                    continue;
                }
                expect(']', "',' or ']' in array");
                return arr;
            }
        }
        if (c == '"') {
            ++pos;
            std::string out;
            while (pos < text.size() && text[pos] != '"') {
                if (text[pos] == '\\' && pos + 1 < text.size()) {
                    char e = text[pos + 1];
                    if (e == '"' || e == '\\') {
                        out += e;
                        pos += 2;
                        continue;
                    }
                }
                if (text[pos] == '\n') {
                    fail_config("config parse error: unterminated string");
                }
                out += text[pos++];
            }
            if (pos >= text.size()) fail_config("config parse error: unterminated string");
            ++pos;
            return Json(out);
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            if (c == '-') ++pos;
            size_t digits = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                ++digits;
            }
            if (digits == 0) {
                fail_config("config parse error at offset " + std::to_string(start) +
                            ": malformed number");
            }
            try {
                return Json(std::stoll(std::string(text.substr(start, pos - start))));
            } catch (const std::exception&) {
                fail_config("config parse error at offset " + std::to_string(start) +
                            ": integer out of range");
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word = bare_key();
            if (word == "true") return Json(true);
            if (word == "false") return Json(false);
            fail_config("config parse error: unexpected word '" + word + "'");
        }
        fail_config("config parse error at offset " + std::to_string(pos) +
                    ": unexpected character '" + std::string(1, c) + "'");
    }
};

} // namespace

Json toml_to_json(std::string_view text) {
    TomlScanner sc{text};
    Json doc = Json::object();
    Json* section = nullptr;
    while (!sc.done()) {
        if (sc.peek() == '[') {
            sc.expect('[', "'['");
            std::string name = sc.bare_key();
            sc.expect(']', "']' closing the section header");
            if (doc.contains(name)) fail_config("duplicate config section [" + name + "]");
            doc[name] = Json::object();
            section = &doc[name];
            continue;
        }
        std::string key = sc.bare_key();
        sc.expect('=', "'=' after key '" + key + "'");
        Json val = sc.value();
        if (!section) fail_config("config key '" + key + "' appears before any [section]");
        if (section->contains(key)) fail_config("duplicate config key '" + key + "'");
        (*section)[key] = std::move(val);
    }
    return doc;
}

Json parse_config_text(std::string_view text, std::string_view format) {
    std::string fmt(format);
    if (fmt == "auto") {
        size_t i = 0;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        fmt = (i < text.size() && text[i] == '{') ? "json" : "toml";
    }
    if (fmt == "json") {
        Json doc = Json::parse(text, nullptr, false);
        if (doc.is_discarded()) fail_config("config is not valid JSON");
        return doc;
    }
    if (fmt == "toml") return toml_to_json(text);
    fail_config("unknown config format '" + std::string(format) + "' (expected toml, json, or auto)");
}

namespace {

void require_object(const Json& v, const std::string& what) {
    if (!v.is_object()) fail_config(what + " must be a table");
}

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed,
                         const std::string& what) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.count(key)) fail_config("unknown key '" + key + "' in " + what);
    }
}

const Json& require_key(const Json& obj, const std::string& key, const std::string& what) {
    if (!obj.contains(key)) fail_config(what + " is missing the key '" + key + "'");
    return obj.at(key);
}

long long require_int(const Json& v, const std::string& what) {
    if (!v.is_number_integer()) fail_config(what + " must be an integer");
    return v.get<long long>();
}

int require_small_int(const Json& v, const std::string& what) {
    long long x = require_int(v, what);
    if (x < -1000000 || x > 1000000) fail_config(what + " is out of range");
    return static_cast<int>(x);
}

std::string require_string(const Json& v, const std::string& what) {
    if (!v.is_string()) fail_config(what + " must be a string");
    return v.get<std::string>();
}

std::vector<long long> int_vector(const Json& v, const std::string& what) {
    if (!v.is_array()) fail_config(what + " must be an array of integers");
    std::vector<long long> out;
    for (const auto& e : v) out.push_back(require_int(e, "entry of " + what));
    return out;
}

std::vector<std::vector<long long>> int_matrix(const Json& v, const std::string& what) {
    if (!v.is_array()) fail_config(what + " must be an array of integer arrays");
    std::vector<std::vector<long long>> out;
    for (const auto& e : v) out.push_back(int_vector(e, "row of " + what));
    return out;
}

Model build_model(const Json& spec) {
    require_object(spec, "[model]");
    std::string type = require_string(require_key(spec, "type", "[model]"), "model type");
    if (type == "projective") {
        reject_unknown_keys(spec, {"type", "n", "d"}, "[model] (projective)");
        int n = require_small_int(require_key(spec, "n", "[model]"), "model n");
        int d = require_small_int(require_key(spec, "d", "[model]"), "model d");
        return make_projective(n, d);
    }
    if (type == "toric") {
        reject_unknown_keys(spec, {"type", "vertices"}, "[model] (toric)");
        return make_toric(int_matrix(require_key(spec, "vertices", "[model]"), "model vertices"));
    }
    fail_config("unknown model type '" + type + "' (expected projective or toric)");
}

FlagSpec build_flag(const Json& spec, const Model& model) {
    require_object(spec, "[flag]");
    std::string variant = require_string(require_key(spec, "variant", "[flag]"), "flag variant");
    if (variant == "coordinate") {
        reject_unknown_keys(spec, {"variant", "order"}, "[flag] (coordinate)");
        CoordinateFlag f;
        for (long long x : int_vector(require_key(spec, "order", "[flag]"), "flag order")) {
            if (x < -1000000 || x > 1000000) fail_config("flag order entry is out of range");
            f.order.push_back(static_cast<int>(x));
        }
        return f;
    }
    if (variant == "curve") {
        reject_unknown_keys(spec, {"variant", "xi1", "param"}, "[flag] (curve)");
        int n = model_dim(model);
        MultiPoly xi1 =
            parse_poly(require_string(require_key(spec, "xi1", "[flag]"), "flag xi1"),
                       ambient_var_names(n));
        const Json& param_spec = require_key(spec, "param", "[flag]");
        if (!param_spec.is_array() || param_spec.empty()) {
            fail_config("flag param must be a nonempty array of polynomial strings");
        }
        std::vector<MultiPoly> components;
        for (const auto& e : param_spec) {
            components.push_back(
                parse_poly(require_string(e, "flag param entry"), param_var_names()));
        }
        return CurveFlag{std::move(xi1), CurveParam(std::move(components))};
    }
    if (variant == "toric_vertex") {
        reject_unknown_keys(spec, {"variant", "vertex", "edges"}, "[flag] (toric_vertex)");
        ToricVertexFlag f;
        f.vertex = int_vector(require_key(spec, "vertex", "[flag]"), "flag vertex");
        f.edges = int_matrix(require_key(spec, "edges", "[flag]"), "flag edges");
        return f;
    }
    fail_config("unknown flag variant '" + variant +
                "' (expected coordinate, curve, or toric_vertex)");
}

} // namespace

RunConfig load_run_config(const Json& doc) {
    require_object(doc, "config document");
    reject_unknown_keys(doc, {"model", "flag"}, "config document");
    Model model = build_model(require_key(doc, "model", "config document"));
    FlagSpec flag = build_flag(require_key(doc, "flag", "config document"), model);
    FlagValidationReport report = validate_flag(model, flag);
    if (!report.ok()) {
        fail_config("flag validation failed: " + report.to_json().dump());
    }
    return RunConfig{std::move(model), std::move(flag), std::move(report)};
}

RunConfig load_run_config_text(std::string_view text, std::string_view format) {
    return load_run_config(parse_config_text(text, format));
}

} // namespace okb
