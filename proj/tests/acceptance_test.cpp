// Acceptance suite: one criterion per invocation argument (1..11), or all
// when run bare. Prints one pass/fail line per criterion; exit code 0 iff
// every executed criterion passed.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "qhopf/fixtures.hpp"
#include "qhopf/report.hpp"

using namespace qhopf;

namespace {

Engine& engine() {
    static Engine e;
    return e;
}

struct Criterion {
    int number;
    const char* summary;
    double time_limit_s;  // 0 = unlimited
    std::function<bool(std::string&)> run;
};

bool report_all_ok(const Report& rep, std::string& detail) {
    for (const auto& e : rep.entries)
        if (!e.ok) {
            detail += e.id + " failed";
            if (!e.residual.empty()) detail += " (" + e.residual + ")";
            detail += "; ";
        }
    return rep.all_ok();
}

bool ids_all_ok(const Report& rep, const char* prefix, std::string& detail, size_t* seen = nullptr) {
    bool ok = true;
    size_t count = 0;
    for (const auto& e : rep.entries) {
        if (e.id.rfind(prefix, 0) != 0) continue;
        ++count;
        if (!e.ok) {
            ok = false;
            detail += e.id + " failed; ";
        }
    }
    if (seen) *seen = count;
    return ok && count > 0;
}

std::vector<Criterion> criteria() {
    std::vector<Criterion> cs;

    cs.push_back({1, "relation derivation reproduces the reference tables", 5.0,
                  [](std::string& detail) {
                      for (auto family :
                           {RelationFamily::XX, RelationFamily::VV, RelationFamily::XV}) {
                          RelationSet set = derive_relations(2, family);
                          const auto& golden = golden_rules(family);
                          if (set.rules.size() != golden.size()) {
                              detail = "rule count mismatch";
                              return false;
                          }
                          for (size_t i = 0; i < golden.size(); ++i) {
                              std::string lhs;
                              for (unsigned char g : set.rules[i].lhs) {
                                  if (!lhs.empty()) lhs += "*";
                                  lhs += gen_name(static_cast<GenId>(g));
                              }
                              if (lhs != golden[i].first ||
                                  set.rules[i].rhs.to_string() != golden[i].second) {
                                  detail = std::string(relation_family_name(family)) +
                                           " rule differs: " + lhs;
                                  return false;
                              }
                          }
                      }
                      return true;
                  }});

    cs.push_back({2, "Yang-Baxter identity exact for n = 1, 2", 30.0, [](std::string& detail) {
                      for (int n : {1, 2})
                          if (!check_ybe(build_r(n)).ok) {
                              detail = "n = " + std::to_string(n);
                              return false;
                          }
                      return true;
                  }});

    cs.push_back({3, "projection certificate (p^2 = p, p = p*, trace, quad)", 60.0,
                  [](std::string& detail) {
                      Report rep;
                      check_projection_identities(engine().s7(), engine().projection(),
                                                  [&](CheckResult r) {
                                                      ReportEntry e;
                                                      e.id = r.id;
                                                      e.ok = r.ok;
                                                      e.residual = r.residual;
                                                      rep.entries.push_back(e);
                                                  });
                      return report_all_ok(rep, detail);
                  }});

    cs.push_back({4, "A(S4_q) presentation holds inside A(S7_q)", 0, [](std::string& detail) {
                      Report rep;
                      verify_s4_relations(engine().s7(), engine().generators(),
                                          [&](CheckResult r) {
                                              ReportEntry e;
                                              e.id = r.id;
                                              e.ok = r.ok;
                                              e.residual = r.residual;
                                              rep.entries.push_back(e);
                                          });
                      return report_all_ok(rep, detail);
                  }});

    cs.push_back({5, "naive projection exhibits the vanishing extra generators", 0,
                  [](std::string& detail) {
                      Report rep;
                      naive_projection_checks(engine().s7(), [&](CheckResult r) {
                          ReportEntry e;
                          e.id = r.id;
                          e.ok = r.ok;
                          e.residual = r.residual;
                          rep.entries.push_back(e);
                      });
                      return report_all_ok(rep, detail);
                  }});

    cs.push_back({6, "coaction, coinvariance, canonical map and strong connection", 120.0,
                  [](std::string& detail) {
                      Report rep = engine().run_bundle(2);
                      return report_all_ok(rep, detail);
                  }});

    cs.push_back({7, "index pairing -1 (1e-9), tau0 = 2, trivial idempotent 0", 5.0,
                  [](std::string& detail) {
                      PairingReport r = index_pairing(0.5, 30, 30);
                      if (!(std::abs(r.pairing_value + 1.0) <= 1e-9)) {
                          detail = "pairing " + std::to_string(r.pairing_value);
                          return false;
                      }
                      if (r.tau0_value != 2.0 || r.trivial_pairing != 0.0) {
                          detail = "tau0/trivial";
                          return false;
                      }
                      return true;
                  }});

    cs.push_back({8, "trace formula and the displayed bounds", 0, [](std::string& detail) {
                      if (!trace_tail_within_bound(rat(1, 2), 30, 30)) {
                          detail = "trace tail exceeds 10 q0^60";
                          return false;
                      }
                      OperatorSet<double> s = build_sigma(0.5, 30, 30);
                      TraceReport tr = trace_report(s);
                      if (!(tr.trace_abs_a <= tr.trace_abs_a_bound &&
                            tr.trace_abs_b <= tr.trace_abs_b_bound)) {
                          detail = "trace bounds";
                          return false;
                      }
                      return true;
                  }});

    cs.push_back({9, "representation relations: float < 1e-12 and exact 0", 0,
                  [](std::string& detail) {
                      OperatorSet<double> s = build_sigma(0.5, 30, 30);
                      for (const auto& rr : verify_relations_numeric(s))
                          if (!(rr.max_residual < 1e-12)) {
                              detail = rr.name + " residual " + std::to_string(rr.max_residual);
                              return false;
                          }
                      OperatorSet<QSqrt> se = build_sigma_exact(rat(1, 2), 12, 12);
                      for (const auto& rr : verify_relations_exact(se))
                          if (!rr.exact_zero) {
                              detail = rr.name + " exact residual nonzero";
                              return false;
                          }
                      return true;
                  }});

    cs.push_back({10, "classical charge c2 = -1 +- 0.05, c1 residual < 1e-6", 120.0,
                  [](std::string& detail) {
                      ChernResult r = chern_numbers(2000000, 1e-4, 42);
                      if (!(std::abs(r.c2_value + 1.0) < 0.05)) {
                          detail = "c2 " + std::to_string(r.c2_value);
                          return false;
                      }
                      if (!(r.c1_max_residual < 1e-6)) {
                          detail = "c1 residual " + std::to_string(r.c1_max_residual);
                          return false;
                      }
                      return true;
                  }});

    cs.push_back({11, "property suites pass under the full verification run", 0,
                  [](std::string& detail) {
                      VerifyOptions opt;  // documented defaults
                      Report rep = engine().verify_all(opt);
                      std::string ignored;
                      size_t n_props = 0;
                      bool props = ids_all_ok(rep, "props.", detail, &n_props);
                      bool qinv = ids_all_ok(rep, "spheres.qinv.", detail);
                      bool su2inv = ids_all_ok(rep, "classical.hopf.su2", detail);
                      bool star = ids_all_ok(rep, "props.star", ignored);
                      if (!rep.all_ok()) {
                          detail += "full run not clean; ";
                          return false;
                      }
                      return props && qinv && su2inv && star && n_props >= 4;
                  }});
    return cs;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    bool all_ok = true;
    for (const auto& c : criteria()) {
        if (only != 0 && c.number != only) continue;
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.time_limit_s > 0 && secs > c.time_limit_s) {
            ok = false;
            detail = "time limit exceeded";
        }
        std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.summary, secs, detail.empty() ? "" : " -- ", detail.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
