// Command-line front end; talks to the engine exclusively through the C API.
#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhopf.h"

namespace {

struct EngineHandle {
    qhopf_engine* eng = nullptr;
    EngineHandle() : eng(qhopf_engine_new()) {}
    ~EngineHandle() { qhopf_engine_free(eng); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { qhopf_string_free(s); }
};

int report_error(qhopf_engine* eng, qhopf_status st) {
    std::fprintf(stderr, "error: %s\n", qhopf_last_error(eng));
    return st == QHOPF_ERR_BAD_ARG || st == QHOPF_ERR_PARSE ? 2 : 1;
}

int run_suite(qhopf_engine* eng, const char* suite, const qhopf_options& opt, bool json) {
    OwnedString out;
    qhopf_status st = qhopf_run_suite(eng, suite, &opt, json ? 1 : 0, &out.s);
    if (out.s) std::fputs(out.s, stdout);
    if (st == QHOPF_OK) return 0;
    if (st == QHOPF_ERR_VERIFY) return 1;
    return report_error(eng, st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic and numeric verification of the symplectic quantum Hopf bundle"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text");

    // derive-relations
    auto* derive = app.add_subcommand("derive-relations", "derive one commutation family");
    int n = 2;
    std::string family = "xx";
    derive->add_option("--n", n, "symplectic rank (1 or 2)")->check(CLI::Range(1, 2));
    derive->add_option("--family", family, "xx, vv or xv")->required();

    // normalize
    auto* normalize = app.add_subcommand("normalize", "normalize an expression");
    std::string algebra = "s7";
    std::string expr;
    normalize->add_option("--algebra", algebra, "s7, su2 or s4");
    normalize->add_option("expr", expr, "expression in the shared grammar")->required();

    // verify-spheres
    auto* spheres = app.add_subcommand("verify-spheres", "projection and 4-sphere certificates");

    // verify-bundle
    auto* bundle = app.add_subcommand("verify-bundle", "coaction and principal-bundle checks");
    int max_degree = 2;
    bundle->add_option("--max-degree", max_degree, "strong-connection word degree")
        ->check(CLI::Range(0, 4));

    // pairing
    auto* pairing = app.add_subcommand("pairing", "index pairing on the truncated representation");
    double q0 = 0.5;
    int M = 30, N = 30;
    bool exact = false;
    pairing->add_option("--q", q0, "deformation parameter in (0,1)");
    pairing->add_option("--m", M, "m-truncation");
    pairing->add_option("--n", N, "n-truncation");
    pairing->add_flag("--exact", exact, "exact rational trace accumulation");

    // chern-classical
    auto* chern = app.add_subcommand("chern-classical", "classical Chern numbers at q = 1");
    long samples = 2000000;
    double fd_step = 1e-4;
    unsigned long long seed = 42;
    chern->add_option("--samples", samples, "Monte-Carlo sample count");
    chern->add_option("--fd-step", fd_step, "central-difference step");
    chern->add_option("--seed", seed, "quasi-random rotation seed");

    // verify-all
    auto* all = app.add_subcommand("verify-all", "run every verification suite");
    qhopf_options opt;
    qhopf_options_init(&opt);
    bool inject = false;
    all->add_option("--q", opt.q0, "deformation parameter");
    all->add_option("--m", opt.m, "m-truncation");
    all->add_option("--n", opt.n, "n-truncation");
    all->add_option("--samples", opt.samples, "Monte-Carlo sample count");
    all->add_option("--fd-step", opt.fd_step, "central-difference step");
    all->add_option("--seed", opt.seed, "random seed");
    all->add_option("--max-degree", opt.max_degree, "strong-connection word degree");
    all->add_flag("--inject-failure", inject, "negative control: corrupt one fixture")
        ->group("");  // hidden

    // lets global flags like --json appear after the subcommand too
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    EngineHandle handle;
    if (!handle.eng) {
        std::fprintf(stderr, "error: engine construction failed\n");
        return 1;
    }
    qhopf_engine* eng = handle.eng;

    if (derive->parsed()) {
        OwnedString out;
        qhopf_status st = qhopf_derive_relations(eng, n, family.c_str(), json ? 1 : 0, &out.s);
        if (st != QHOPF_OK) return report_error(eng, st);
        std::fputs(out.s, stdout);
        return 0;
    }
    if (normalize->parsed()) {
        OwnedString out;
        qhopf_status st = qhopf_normalize(eng, algebra.c_str(), expr.c_str(), &out.s);
        if (st != QHOPF_OK) return report_error(eng, st);
        if (json) {
            nlohmann::json j;
            j["input"] = expr;
            j["algebra"] = algebra;
            j["normal_form"] = out.s;
            std::printf("%s\n", j.dump(2).c_str());
        } else {
            std::printf("%s\n", out.s);
        }
        return 0;
    }
    if (spheres->parsed()) return run_suite(eng, "spheres", opt, json);
    if (bundle->parsed()) {
        opt.max_degree = max_degree;
        return run_suite(eng, "bundle", opt, json);
    }
    if (pairing->parsed()) {
        OwnedString out;
        qhopf_status st = qhopf_index_pairing(eng, q0, M, N, exact ? 1 : 0, &out.s);
        if (st != QHOPF_OK) return report_error(eng, st);
        if (json) {
            std::printf("%s\n", out.s);
        } else {
            auto j = nlohmann::json::parse(out.s);
            std::printf("q0 = %g, truncation %d x %d%s\n", j["q0"].get<double>(),
                        j["M"].get<int>(), j["N"].get<int>(),
                        j["exact_mode"].get<bool>() ? " (exact)" : "");
            std::printf("Tr(t)            = %.15g\n", j["trace_t"].get<double>());
            std::printf("closed form      = %.15g\n", j["closed_form"].get<double>());
            std::printf("pairing <mu,p>   = %.15g\n", j["pairing_value"].get<double>());
            std::printf("pairing tau0     = %g\n", j["tau0_value"].get<double>());
            std::printf("pairing <mu,1>   = %g\n", j["trivial_pairing"].get<double>());
            std::printf("truncation bound = %.3e\n", j["truncation_error_bound"].get<double>());
        }
        return 0;
    }
    if (chern->parsed()) {
        OwnedString out;
        qhopf_status st = qhopf_chern_classical(eng, samples, fd_step, seed, &out.s);
        if (st != QHOPF_OK) return report_error(eng, st);
        if (json) {
            std::printf("%s\n", out.s);
        } else {
            auto j = nlohmann::json::parse(out.s);
            std::printf("c2 = %.6f (samples %ld, h = %g, seed %llu)\n",
                        j["c2_value"].get<double>(), j["samples"].get<long>(),
                        j["fd_step"].get<double>(),
                        static_cast<unsigned long long>(j["seed"].get<uint64_t>()));
            std::printf("max |tr(p (dp)^2)| = %.3e\n", j["c1_max_residual"].get<double>());
        }
        return 0;
    }
    if (all->parsed()) {
        opt.inject_failure = inject ? 1 : 0;
        return run_suite(eng, "all", opt, json);
    }
    return 2;
}
