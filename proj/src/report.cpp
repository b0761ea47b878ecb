#include "qhopf/report.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "json.hpp"
#include "qhopf/fixtures.hpp"
#include "qhopf/parser.hpp"

namespace qhopf {

std::string Report::to_json() const {
    nlohmann::json j;
    j["all_ok"] = all_ok();
    j["checks"] = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json c;
        c["id"] = e.id;
        c["description"] = e.description;
        c["status"] = e.ok ? "pass" : "fail";
        if (!e.residual.empty()) c["residual"] = e.residual;
        c["wall_ms"] = e.wall_ms;
        j["checks"].push_back(c);
    }
    return j.dump(2);
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.ok ? "[PASS] " : "[FAIL] ") << e.id << "  " << e.description;
        if (!e.ok && !e.residual.empty()) os << "  (residual: " << e.residual << ")";
        os << "\n";
    }
    os << (all_ok() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

namespace {

/// Sink adapter stamping incremental wall time on each emitted check.
struct TimedSink {
    Report& report;
    std::chrono::steady_clock::time_point last = std::chrono::steady_clock::now();

    void operator()(CheckResult r) {
        auto now = std::chrono::steady_clock::now();
        ReportEntry e;
        e.id = std::move(r.id);
        e.description = std::move(r.description);
        e.ok = r.ok;
        e.residual = std::move(r.residual);
        e.wall_ms = std::chrono::duration<double, std::milli>(now - last).count();
        last = now;
        report.entries.push_back(std::move(e));
    }
};

CheckSink make_sink(TimedSink& ts) {
    return [&ts](CheckResult r) { ts(std::move(r)); };
}

}  // namespace

Engine::Engine()
    : s7_(make_s7_system()),
      s4_(make_s4_system()),
      su2_(),
      v_(build_v(s7_)),
      p_(build_projection(s7_, v_)),
      gens_(extract_s4_generators(p_)),
      coact_(s7_, su2_),
      ell_(coact_, v_) {}

const RewriteSystem& system_by_name(const Engine& e, const std::string& algebra) {
    if (algebra == "s7") return e.s7();
    if (algebra == "s4") return e.s4();
    if (algebra == "su2") return e.su2().system();
    throw std::invalid_argument("unknown algebra '" + algebra + "' (expected s7, su2 or s4)");
}

std::string Engine::normalize_expr(const std::string& algebra, const std::string& expr) const {
    const RewriteSystem& rs = system_by_name(*this, algebra);
    return rs.normalize(parse_expr(expr)).to_string();
}

Report Engine::run_relations(bool inject_failure) const {
    Report rep;
    TimedSink ts{rep};

    for (auto family : {RelationFamily::XX, RelationFamily::VV, RelationFamily::XV}) {
        RelationSet derived = derive_relations(2, family);
        auto golden = golden_rules(family);
        if (inject_failure && family == RelationFamily::XX)
            golden[0].second = "q^2*x1*x2";  // deliberately wrong fixture
        bool match = derived.rules.size() == golden.size();
        std::string detail;
        for (size_t i = 0; match && i < golden.size(); ++i) {
            std::string lhs;
            for (unsigned char g : derived.rules[i].lhs) {
                if (!lhs.empty()) lhs += "*";
                lhs += gen_name(static_cast<GenId>(g));
            }
            if (lhs != golden[i].first || derived.rules[i].rhs.to_string() != golden[i].second) {
                match = false;
                detail = lhs + " -> " + derived.rules[i].rhs.to_string() + " vs " +
                         golden[i].first + " -> " + golden[i].second;
            }
        }
        CheckResult r;
        r.id = std::string("relations.golden.") + relation_family_name(family);
        r.description = std::string("derived ") + relation_family_name(family) +
                        " table matches the reference fixture";
        r.ok = match;
        r.residual = detail;
        ts(std::move(r));
    }

    // Derived tables are consistent with the assembled rewrite system: both
    // sides of each golden relation share a normal form.
    bool consistent = true;
    std::string bad;
    for (auto family : {RelationFamily::XX, RelationFamily::VV, RelationFamily::XV,
                        RelationFamily::SPHERE}) {
        for (const auto& [lhs_s, rhs_s] : golden_rules(family)) {
            NCPoly lhs = s7_.normalize(parse_expr(lhs_s));
            NCPoly rhs = s7_.normalize(parse_expr(rhs_s));
            if (lhs != rhs) {
                consistent = false;
                bad = lhs_s;
            }
        }
    }
    {
        CheckResult r;
        r.id = "relations.consistent";
        r.description = "golden relations normalize to equal forms in the full system";
        r.ok = consistent;
        r.residual = bad;
        ts(std::move(r));
    }

    for (int n : {1, 2}) {
        YbeReport y = check_ybe(build_r(n));
        CheckResult r;
        r.id = "relations.ybe.n" + std::to_string(n);
        r.description = "Yang-Baxter identity for the n = " + std::to_string(n) + " R-matrix";
        r.ok = y.ok;
        if (!y.ok) r.residual = std::to_string(y.residuals.size()) + " differing components";
        ts(std::move(r));
    }

    {
        RMatrix r2 = build_r(2);
        CheckResult r;
        r.id = "relations.support";
        r.description = "R-matrix support matches the closed five-sum count";
        r.ok = r2.nonzero_count() == expected_r_support(2) &&
               build_r(1).nonzero_count() == expected_r_support(1);
        ts(std::move(r));
    }
    return rep;
}

Report Engine::run_spheres() const {
    Report rep;
    TimedSink ts{rep};
    CheckSink sink = make_sink(ts);
    check_projection_identities(s7_, p_, sink);
    verify_s4_relations(s7_, gens_, sink);
    naive_projection_checks(s7_, sink);
    plucker_check(s7_, v_, gens_, sink);
    q_inverse_iso_check(s4_, sink);
    s4_abstract_vs_embedded_check(s7_, s4_, gens_, sink);
    return rep;
}

Report Engine::run_bundle(int max_degree) const {
    Report rep;
    TimedSink ts{rep};
    CheckSink sink = make_sink(ts);
    su2_hopf_checks(su2_, sink);
    verify_coaction_well_defined(coact_, sink);
    verify_coinvariance(coact_, p_, gens_, v_, sink);
    verify_comodule_property(coact_, sink);
    canonical_map_checks(coact_, v_, sink);
    verify_strong_connection(ell_, max_degree, sink);
    associated_module_check(s7_, v_, p_, sink);
    return rep;
}

Report Engine::run_representation(double q0, int M, int N, double tol_residual,
                                  double tol_pairing) const {
    Report rep;
    TimedSink ts{rep};
    representation_checks(q0, M, N, tol_residual, tol_pairing, make_sink(ts));
    return rep;
}

Report Engine::run_classical(long samples, double fd_step, uint64_t seed) const {
    Report rep;
    TimedSink ts{rep};
    classical_checks(samples, fd_step, seed, s7_, p_, make_sink(ts));
    return rep;
}

Report Engine::run_properties(uint64_t seed) const {
    Report rep;
    TimedSink ts{rep};
    std::mt19937_64 rng(seed);

    const auto& alphabet = s7_.alphabet();
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 4);
    auto random_word = [&]() {
        Word w;
        int l = len(rng);
        for (int i = 0; i < l; ++i) w.push_back(static_cast<char>(alphabet[pick(rng)]));
        return w;
    };

    // Randomized associativity / empirical confluence.
    int failures = 0;
    const int kTriples = 1000;
    for (int i = 0; i < kTriples; ++i) {
        NCPoly u = NCPoly::term(random_word(), LaurentPoly::one());
        NCPoly v = NCPoly::term(random_word(), LaurentPoly::one());
        NCPoly w = NCPoly::term(random_word(), LaurentPoly::one());
        if (s7_.mul(u, s7_.mul(v, w)) != s7_.mul(s7_.mul(u, v), w)) ++failures;
    }
    {
        CheckResult r;
        r.id = "props.assoc";
        r.description = "randomized associativity of normalized products (1000 triples)";
        r.ok = failures == 0;
        r.residual = std::to_string(failures) + " failing triples";
        ts(std::move(r));
    }

    // Star is an involution and the defining ideal is star-closed.
    bool star_ok = true;
    for (int i = 0; i < 200; ++i) {
        NCPoly e = NCPoly::term(random_word(), LaurentPoly::monomial(rat(1 + i % 5), i % 7 - 3));
        if (nc_star(nc_star(e)) != e) star_ok = false;
    }
    {
        CheckResult r;
        r.id = "props.star_involution";
        r.description = "star is an involution on random elements";
        r.ok = star_ok;
        ts(std::move(r));
    }
    bool ideal_ok = true;
    std::string bad;
    for (const auto& [lhs, rhs] : s7_.rules_sorted()) {
        NCPoly rel = NCPoly::term(lhs, LaurentPoly::one()) - rhs;
        if (!s7_.reduces_to_zero(nc_star(rel))) {
            ideal_ok = false;
            for (unsigned char g : lhs) bad += gen_name(static_cast<GenId>(g));
        }
    }
    {
        CheckResult r;
        r.id = "props.star_ideal";
        r.description = "conjugate of every defining relation is again a relation";
        r.ok = ideal_ok;
        r.residual = bad;
        ts(std::move(r));
    }

    // q = 1 degeneration: every non-sphere rule becomes plain commutativity.
    bool degeneration_ok = true;
    const Word sphere_lhs = word_of({XB1, X1});
    for (const auto& [lhs, rhs] : s7_.rules_sorted()) {
        if (lhs == sphere_lhs) continue;
        Word swapped;
        swapped.push_back(lhs[1]);
        swapped.push_back(lhs[0]);
        for (const auto& [w, c] : rhs.terms()) {
            Rational v = c.eval(Rational(1));
            if (w == swapped ? v != 1 : v != 0) degeneration_ok = false;
        }
    }
    {
        CheckResult r;
        r.id = "props.q1_commutative";
        r.description = "rule coefficients at q = 1 reduce every rule to commutativity";
        r.ok = degeneration_ok;
        ts(std::move(r));
    }
    return rep;
}

Report Engine::verify_all(const VerifyOptions& opt) const {
    Report rep;
    // A crash in one suite becomes a failed entry instead of aborting the run.
    auto absorb = [&rep](const char* suite, auto runner) {
        try {
            Report part = runner();
            for (auto& e : part.entries) rep.entries.push_back(std::move(e));
        } catch (const std::exception& ex) {
            ReportEntry e;
            e.id = std::string(suite) + ".crash";
            e.description = std::string("suite ") + suite + " aborted";
            e.ok = false;
            e.residual = ex.what();
            rep.entries.push_back(std::move(e));
        }
    };
    absorb("relations", [&] { return run_relations(opt.inject_failure); });
    absorb("spheres", [&] { return run_spheres(); });
    absorb("bundle", [&] { return run_bundle(opt.max_degree); });
    absorb("representation", [&] {
        return run_representation(opt.q0, opt.M, opt.N, opt.tol_residual, opt.tol_pairing);
    });
    absorb("properties", [&] { return run_properties(opt.seed ^ 0x5bd1e995); });
    absorb("classical", [&] { return run_classical(opt.samples, opt.fd_step, opt.seed); });
    return rep;
}

std::vector<std::pair<int, std::vector<std::string>>> Engine::criterion_coverage() {
    return {
        {1, {"relations.golden.xx", "relations.golden.vv", "relations.golden.xv"}},
        {2, {"relations.ybe.n1", "relations.ybe.n2"}},
        {3, {"spheres.proj.idem.11", "spheres.proj.selfadj.11", "spheres.proj.trace",
             "spheres.proj.quad"}},
        {4, {"spheres.s4rel.ab=q4ba", "spheres.s4rel.q4.abar.a+q-4.bbar.b"}},
        {5, {"spheres.naive.extra14", "spheres.naive.extra23", "spheres.naive.vanish_q1"}},
        {6, {"coaction.rule.xb1x1", "coaction.coinv.t", "coaction.chi.alpha", "ell.chi.alpha",
             "ell.colinear_r.gamma*gammab", "ell.colinear_l.gamma*gammab"}},
        {7, {"rep.pairing.value", "rep.pairing.tau0", "rep.pairing.trivial"}},
        {8, {"rep.trace.t", "rep.trace.abs_a", "rep.trace.abs_b"}},
        {9, {"rep.sigma.ab=q4ba", "rep.exact.ab=q4ba"}},
        {10, {"classical.chern.c2", "classical.chern.c1"}},
        {11, {"props.assoc", "props.star_involution", "spheres.qinv.ab=q4ba",
              "classical.hopf.su2"}},
    };
}

}  // namespace qhopf
