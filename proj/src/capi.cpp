#include "qhopf.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "qhopf/parser.hpp"
#include "qhopf/report.hpp"

struct qhopf_engine {
    qhopf::Engine impl;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qhopf_status fail(qhopf_engine* eng, qhopf_status code, const std::string& msg) {
    if (eng) eng->last_error = msg;
    return code;
}

template <typename Fn>
qhopf_status guarded(qhopf_engine* eng, Fn fn) {
    if (!eng) return QHOPF_ERR_BAD_ARG;
    eng->last_error.clear();
    try {
        return fn();
    } catch (const qhopf::ParseError& e) {
        return fail(eng, QHOPF_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(eng, QHOPF_ERR_BAD_ARG, e.what());
    } catch (const std::domain_error& e) {
        return fail(eng, QHOPF_ERR_BAD_ARG, e.what());
    } catch (const std::exception& e) {
        return fail(eng, QHOPF_ERR_INTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

qhopf_engine* qhopf_engine_new(void) {
    try {
        return new qhopf_engine();
    } catch (...) {
        return nullptr;
    }
}

void qhopf_engine_free(qhopf_engine* eng) { delete eng; }

const char* qhopf_last_error(const qhopf_engine* eng) {
    return eng ? eng->last_error.c_str() : "null engine";
}

void qhopf_string_free(char* s) { std::free(s); }

qhopf_status qhopf_normalize(qhopf_engine* eng, const char* algebra, const char* expr,
                             char** out) {
    return guarded(eng, [&]() -> qhopf_status {
        if (!algebra || !expr || !out) return fail(eng, QHOPF_ERR_BAD_ARG, "null argument");
        *out = dup_string(eng->impl.normalize_expr(algebra, expr));
        return QHOPF_OK;
    });
}

qhopf_status qhopf_derive_relations(qhopf_engine* eng, int n, const char* family, int as_json,
                                    char** out) {
    return guarded(eng, [&]() -> qhopf_status {
        if (!family || !out) return fail(eng, QHOPF_ERR_BAD_ARG, "null argument");
        std::string fam(family);
        qhopf::RelationFamily f;
        if (fam == "xx")
            f = qhopf::RelationFamily::XX;
        else if (fam == "vv")
            f = qhopf::RelationFamily::VV;
        else if (fam == "xv")
            f = qhopf::RelationFamily::XV;
        else
            return fail(eng, QHOPF_ERR_BAD_ARG, "unknown family '" + fam + "'");

        qhopf::RelationSet set = qhopf::derive_relations(n, f);
        auto lhs_str = [](const qhopf::Word& w) {
            std::string s;
            for (unsigned char g : w) {
                if (!s.empty()) s += "*";
                s += qhopf::gen_name(static_cast<qhopf::GenId>(g));
            }
            return s;
        };
        if (as_json) {
            nlohmann::json j;
            j["family"] = fam;
            j["rules"] = nlohmann::json::array();
            for (const auto& rule : set.rules)
                j["rules"].push_back({{"lhs", lhs_str(rule.lhs)}, {"rhs", rule.rhs.to_string()}});
            *out = dup_string(j.dump(2));
        } else {
            std::string text;
            for (const auto& rule : set.rules)
                text += lhs_str(rule.lhs) + " -> " + rule.rhs.to_string() + "\n";
            *out = dup_string(text);
        }
        return QHOPF_OK;
    });
}

void qhopf_options_init(qhopf_options* opt) {
    if (!opt) return;
    opt->q0 = 0.5;
    opt->m = 30;
    opt->n = 30;
    opt->samples = 2000000;
    opt->fd_step = 1e-4;
    opt->seed = 42;
    opt->max_degree = 2;
    opt->inject_failure = 0;
}

qhopf_status qhopf_run_suite(qhopf_engine* eng, const char* suite, const qhopf_options* opt,
                             int as_json, char** out_report) {
    return guarded(eng, [&]() -> qhopf_status {
        if (!suite || !out_report) return fail(eng, QHOPF_ERR_BAD_ARG, "null argument");
        qhopf_options defaults;
        qhopf_options_init(&defaults);
        const qhopf_options& o = opt ? *opt : defaults;

        qhopf::VerifyOptions vo;
        vo.q0 = o.q0;
        vo.M = o.m;
        vo.N = o.n;
        vo.samples = o.samples;
        vo.fd_step = o.fd_step;
        vo.seed = o.seed;
        vo.max_degree = o.max_degree;
        vo.inject_failure = o.inject_failure != 0;

        std::string s(suite);
        qhopf::Report rep;
        const qhopf::Engine& impl = eng->impl;
        if (s == "relations")
            rep = impl.run_relations(vo.inject_failure);
        else if (s == "spheres")
            rep = impl.run_spheres();
        else if (s == "bundle")
            rep = impl.run_bundle(vo.max_degree);
        else if (s == "representation")
            rep = impl.run_representation(vo.q0, vo.M, vo.N, vo.tol_residual, vo.tol_pairing);
        else if (s == "classical")
            rep = impl.run_classical(vo.samples, vo.fd_step, vo.seed);
        else if (s == "properties")
            rep = impl.run_properties(vo.seed);
        else if (s == "all")
            rep = impl.verify_all(vo);
        else
            return fail(eng, QHOPF_ERR_BAD_ARG, "unknown suite '" + s + "'");

        *out_report = dup_string(as_json ? rep.to_json() : rep.to_text());
        if (!rep.all_ok()) return fail(eng, QHOPF_ERR_VERIFY, "verification checks failed");
        return QHOPF_OK;
    });
}

qhopf_status qhopf_index_pairing(qhopf_engine* eng, double q0, int m, int n, int exact_mode,
                                 char** out_json) {
    return guarded(eng, [&]() -> qhopf_status {
        if (!out_json) return fail(eng, QHOPF_ERR_BAD_ARG, "null argument");
        if (!(q0 > 0.0 && q0 < 1.0))
            return fail(eng, QHOPF_ERR_BAD_ARG, "q0 must lie in (0,1)");
        if (m < 1 || n < 1) return fail(eng, QHOPF_ERR_BAD_ARG, "truncation must be positive");
        qhopf::PairingReport r = qhopf::index_pairing(q0, m, n, exact_mode != 0);
        nlohmann::json j;
        j["q0"] = r.q0;
        j["M"] = r.M;
        j["N"] = r.N;
        j["trace_t"] = r.trace_t;
        j["closed_form"] = r.closed_form;
        j["pairing_value"] = r.pairing_value;
        j["tau0_value"] = r.tau0_value;
        j["trivial_pairing"] = r.trivial_pairing;
        j["truncation_error_bound"] = r.truncation_error_bound;
        j["exact_mode"] = r.exact_mode;
        *out_json = dup_string(j.dump(2));
        return QHOPF_OK;
    });
}

qhopf_status qhopf_chern_classical(qhopf_engine* eng, long samples, double fd_step,
                                   unsigned long long seed, char** out_json) {
    return guarded(eng, [&]() -> qhopf_status {
        if (!out_json) return fail(eng, QHOPF_ERR_BAD_ARG, "null argument");
        if (samples < 1000) return fail(eng, QHOPF_ERR_BAD_ARG, "need at least 1000 samples");
        if (!(fd_step > 0)) return fail(eng, QHOPF_ERR_BAD_ARG, "fd_step must be positive");
        qhopf::ChernResult r = qhopf::chern_numbers(samples, fd_step, seed);
        nlohmann::json j;
        j["c2_value"] = r.c2_value;
        j["c1_max_residual"] = r.c1_max_residual;
        j["samples"] = r.samples;
        j["fd_step"] = r.fd_step;
        j["seed"] = r.seed;
        *out_json = dup_string(j.dump(2));
        return QHOPF_OK;
    });
}

}  // extern "C"
