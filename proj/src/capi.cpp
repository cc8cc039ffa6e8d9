#include "okbody.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "okbody/config.hpp"

struct okb_session {
    okb::RunConfig cfg;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

okb_status status_of(okb::ErrorKind kind) {
    switch (kind) {
        case okb::ErrorKind::Config: return OKB_ERR_CONFIG;
        case okb::ErrorKind::Hypothesis: return OKB_ERR_HYPOTHESIS;
        case okb::ErrorKind::Internal: return OKB_ERR_INTERNAL;
    }
    return OKB_ERR_INTERNAL;
}

okb_status usage_error(char** err_msg, const char* what) {
    if (err_msg) *err_msg = dup_string(what);
    return OKB_ERR_USAGE;
}

template <typename Fn>
okb_status guarded(char** err_msg, Fn&& fn) {
    if (err_msg) *err_msg = nullptr;
    try {
        fn();
        return OKB_OK;
    } catch (const okb::Error& e) {
        if (err_msg) *err_msg = dup_string(e.what());
        return status_of(e.kind());
    } catch (const std::exception& e) {
        if (err_msg) *err_msg = dup_string(e.what());
        return OKB_ERR_INTERNAL;
    }
}

okb_status emit(char** out, const okb::Json& doc, char** err_msg) {
    (void)err_msg;
    *out = dup_string(doc.dump(2) + "\n");
    return OKB_OK;
}

} // namespace

extern "C" {

okb_status okb_session_open(const char* config_text, const char* format, okb_session** out_session,
                            char** err_msg) {
    if (!config_text || !out_session) return usage_error(err_msg, "null argument");
    *out_session = nullptr;
    return guarded(err_msg, [&] {
        auto cfg = okb::load_run_config_text(config_text, format ? format : "auto");
        *out_session = new okb_session{std::move(cfg)};
    });
}

void okb_session_close(okb_session* session) {
    delete session;
}

okb_status okb_validation_report(okb_session* session, char** json_out, char** err_msg) {
    if (!session || !json_out) return usage_error(err_msg, "null argument");
    return guarded(err_msg, [&] { emit(json_out, session->cfg.report.to_json(), err_msg); });
}

okb_status okb_body(okb_session* session, int max_level, char** json_out, char** err_msg) {
    if (!session || !json_out) return usage_error(err_msg, "null argument");
    return guarded(err_msg, [&] {
        okb::SemigroupSample sample =
            okb::enumerate_semigroup(session->cfg.model, session->cfg.flag, max_level);
        okb::VPolytope body = okb::body_approx(sample);
        okb::Json doc{{"max_level", max_level},
                      {"body", body.to_json()},
                      {"sample", sample.to_json()}};
        emit(json_out, doc, err_msg);
    });
}

okb_status okb_verify_theorem(okb_session* session, int max_level, char** json_out,
                              char** err_msg) {
    if (!session || !json_out) return usage_error(err_msg, "null argument");
    return guarded(err_msg, [&] {
        emit(json_out,
             okb::verify_theorem(session->cfg.model, session->cfg.flag, max_level).to_json(),
             err_msg);
    });
}

okb_status okb_decompose(okb_session* session, const long long* a, int a_len, long long k,
                         char** json_out, char** err_msg) {
    if (!session || !json_out || !a || a_len < 1) return usage_error(err_msg, "null argument");
    return guarded(err_msg, [&] {
        okb::ValVec av(a, a + a_len);
        emit(json_out, okb::decompose(session->cfg.model, session->cfg.flag, av, k).to_json(),
             err_msg);
    });
}

okb_status okb_lemma_witness(okb_session* session, const char* c, int max_m, char** json_out,
                             char** err_msg) {
    if (!session || !json_out || !c) return usage_error(err_msg, "null argument");
    return guarded(err_msg, [&] {
        okb::Rat cv = okb::rat_parse(c);
        emit(json_out,
             okb::lemma_witness(session->cfg.model, session->cfg.flag, cv, max_m).to_json(),
             err_msg);
    });
}

okb_status okb_scaling_check(okb_session* session, int m, int max_level, char** json_out,
                             char** err_msg) {
    if (!session || !json_out) return usage_error(err_msg, "null argument");
    return guarded(err_msg, [&] {
        emit(json_out,
             okb::scaling_check(session->cfg.model, session->cfg.flag, m, max_level).to_json(),
             err_msg);
    });
}

okb_status okb_volume_table(okb_session* session, int max_level, int as_csv, int decimal,
                            char** out, char** err_msg) {
    if (!session || !out) return usage_error(err_msg, "null argument");
    return guarded(err_msg, [&] {
        auto rows = okb::volume_vs_hilbert(session->cfg.model, session->cfg.flag, max_level);
        if (as_csv) {
            *out = dup_string(okb::volume_table_csv(rows, decimal != 0));
        } else {
            emit(out, okb::volume_table_json(rows, max_level, decimal != 0), err_msg);
        }
    });
}

okb_status okb_axiom_check(okb_session* session, int trials, unsigned long long seed,
                           int max_level, char** json_out, char** err_msg) {
    if (!session || !json_out) return usage_error(err_msg, "null argument");
    return guarded(err_msg, [&] {
        emit(json_out,
             okb::valuation_axiom_check(session->cfg.model, session->cfg.flag, trials, seed,
                                        max_level)
                 .to_json(),
             err_msg);
    });
}

void okb_string_free(char* s) {
    std::free(s);
}

const char* okb_version(void) {
    return "1.0.0";
}

} // extern "C"
