#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "okbody.h"

namespace {

[[noreturn]] void die(int code, const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    std::exit(code);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(1, "cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string config_format(const std::string& path) {
    auto ends_with = [&](const char* suffix) {
        size_t n = std::strlen(suffix);
        return path.size() >= n && path.compare(path.size() - n, n, suffix) == 0;
    };
    if (ends_with(".toml")) return "toml";
    if (ends_with(".json")) return "json";
    return "auto";
}

void write_output(const std::string& out_path, const char* data) {
    if (out_path.empty()) {
        std::fputs(data, stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) die(1, "cannot write output file '" + out_path + "'");
    out << data;
    out.flush();
    if (!out) die(1, "failed while writing output file '" + out_path + "'");
}

long long level_cap() {
    const char* env = std::getenv("OKOUNKOV_MAX_LEVEL_CAP");
    if (!env) return 12;
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        die(2, "OKOUNKOV_MAX_LEVEL_CAP must be a positive integer, got '" + s + "'");
    }
    long long cap = 0;
    try {
        cap = std::stoll(s);
    } catch (const std::exception&) {
        die(2, "OKOUNKOV_MAX_LEVEL_CAP is out of range");
    }
    if (cap < 1) die(2, "OKOUNKOV_MAX_LEVEL_CAP must be a positive integer");
    return cap;
}

void check_level_cap(int k) {
    long long cap = level_cap();
    if (k > cap) {
        die(2, "max level " + std::to_string(k) + " exceeds the level cap " + std::to_string(cap) +
               " (raise OKOUNKOV_MAX_LEVEL_CAP to allow it)");
    }
}

okb_session* open_session(const std::string& config_path) {
    std::string text = read_file(config_path);
    okb_session* session = nullptr;
    char* err = nullptr;
    okb_status st =
        okb_session_open(text.c_str(), config_format(config_path).c_str(), &session, &err);
    if (st != OKB_OK) {
        std::string msg = err ? err : "failed to load configuration";
        okb_string_free(err);
        die(static_cast<int>(st), msg);
    }
    return session;
}

// Takes ownership of out/err; writes the report or dies with the status.
std::string finish(okb_status st, char* out, char* err, const std::string& out_path) {
    if (st != OKB_OK) {
        std::string msg = err ? err : "computation failed";
        okb_string_free(err);
        okb_string_free(out);
        die(static_cast<int>(st), msg);
    }
    std::string copy = out ? out : "";
    write_output(out_path, copy.c_str());
    okb_string_free(out);
    okb_string_free(err);
    return copy;
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t check = piece.find_first_not_of("0123456789", piece.size() && piece[0] == '-' ? 1 : 0);
        if (piece.empty() || check != std::string::npos || piece == "-") {
            die(1, "--a expects a comma-separated integer list, got '" + text + "'");
        }
        try {
            out.push_back(std::stoll(piece));
        } catch (const std::exception&) {
            die(1, "--a entry out of range in '" + text + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-Okounkov bodies of flagged projective and toric models"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format = "json";
    std::string a_text;
    std::string c_text;
    int max_level = 1;
    int axiom_level = 2;
    long long k_level = 0;
    int m_factor = 0;
    int max_m = 64;
    int trials = 200;
    unsigned long long seed = 12345;
    bool decimal = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "model/flag configuration file (TOML or JSON)")
            ->required();
        sub->add_option("--out", out_path, "write the report here instead of standard output");
    };

    CLI::App* cmd_body = app.add_subcommand("body", "body approximation and raw sample");
    add_common(cmd_body);
    cmd_body->add_option("--max-level", max_level, "levels to enumerate (default 1)");

    CLI::App* cmd_verify =
        app.add_subcommand("verify-theorem", "compare the sample body with the predicted simplex");
    add_common(cmd_verify);
    cmd_verify->add_option("--max-level", max_level, "levels to enumerate (default 1)");

    CLI::App* cmd_decompose =
        app.add_subcommand("decompose", "convex decomposition of a sample point");
    add_common(cmd_decompose);
    cmd_decompose->add_option("--a", a_text, "valuation vector, e.g. 3,0")->required();
    cmd_decompose->add_option("--k", k_level, "level of the point")->required();

    CLI::App* cmd_lemma = app.add_subcommand("lemma-witness", "interval witness for the lemma");
    add_common(cmd_lemma);
    cmd_lemma->add_option("--c", c_text, "parameter in (0, b), an exact rational")->required();
    cmd_lemma->add_option("--max-m", max_m, "witness search cap (default 64)");

    CLI::App* cmd_scaling =
        app.add_subcommand("scaling-check", "compare the reindexed body with the scaled body");
    add_common(cmd_scaling);
    cmd_scaling->add_option("--m", m_factor, "reindexing factor")->required();
    cmd_scaling->add_option("--max-level", max_level, "levels to enumerate (default 1)");

    CLI::App* cmd_volume =
        app.add_subcommand("volume-table", "per-level Hilbert dimensions and body volumes");
    add_common(cmd_volume);
    cmd_volume->add_option("--max-level", max_level, "levels to tabulate (default 1)");
    cmd_volume->add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_volume->add_flag("--decimal", decimal, "add display-only decimal columns");

    CLI::App* cmd_axiom = app.add_subcommand("axiom-check", "randomized valuation-axiom check");
    add_common(cmd_axiom);
    cmd_axiom->add_option("--trials", trials, "random section pairs to test (default 200)");
    cmd_axiom->add_option("--seed", seed, "random seed (default 12345)");
    cmd_axiom->add_option("--max-level", axiom_level, "largest level to sample (default 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    char* out = nullptr;
    char* err = nullptr;

    if (cmd_body->parsed()) {
        check_level_cap(max_level);
        okb_session* s = open_session(config_path);
        okb_status st = okb_body(s, max_level, &out, &err);
        finish(st, out, err, out_path);
        okb_session_close(s);
        return 0;
    }
    if (cmd_verify->parsed()) {
        check_level_cap(max_level);
        okb_session* s = open_session(config_path);
        okb_status st = okb_verify_theorem(s, max_level, &out, &err);
        std::string report = finish(st, out, err, out_path);
        okb_session_close(s);
        auto doc = nlohmann::json::parse(report);
        if (!doc.at("contained").get<bool>()) {
            die(4, "sample body is not contained in the predicted simplex");
        }
        return 0;
    }
    if (cmd_decompose->parsed()) {
        std::vector<long long> a = parse_int_list(a_text);
        okb_session* s = open_session(config_path);
        okb_status st = okb_decompose(s, a.data(), static_cast<int>(a.size()), k_level, &out, &err);
        finish(st, out, err, out_path);
        okb_session_close(s);
        return 0;
    }
    if (cmd_lemma->parsed()) {
        okb_session* s = open_session(config_path);
        okb_status st = okb_lemma_witness(s, c_text.c_str(), max_m, &out, &err);
        finish(st, out, err, out_path);
        okb_session_close(s);
        return 0;
    }
    if (cmd_scaling->parsed()) {
        check_level_cap(max_level);
        okb_session* s = open_session(config_path);
        okb_status st = okb_scaling_check(s, m_factor, max_level, &out, &err);
        finish(st, out, err, out_path);
        okb_session_close(s);
        return 0;
    }
    if (cmd_volume->parsed()) {
        check_level_cap(max_level);
        okb_session* s = open_session(config_path);
        okb_status st =
            okb_volume_table(s, max_level, format == "csv" ? 1 : 0, decimal ? 1 : 0, &out, &err);
        finish(st, out, err, out_path);
        okb_session_close(s);
        return 0;
    }
    if (cmd_axiom->parsed()) {
        check_level_cap(axiom_level);
        okb_session* s = open_session(config_path);
        okb_status st = okb_axiom_check(s, trials, seed, axiom_level, &out, &err);
        std::string report = finish(st, out, err, out_path);
        okb_session_close(s);
        auto doc = nlohmann::json::parse(report);
        if (!doc.at("violations").empty()) {
            die(4, "valuation axiom violations detected");
        }
        return 0;
    }
    return 1;
}
