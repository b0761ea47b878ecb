#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/classical.hpp"
#include "qhopf/coaction.hpp"
#include "qhopf/representation.hpp"

namespace qhopf {

struct ReportEntry {
    std::string id;
    std::string description;
    bool ok = true;
    std::string residual;
    double wall_ms = 0;
};

struct Report {
    std::vector<ReportEntry> entries;
    bool all_ok() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }
    std::string to_json() const;
    /// One line per check: "[PASS|FAIL] id  description (residual)".
    std::string to_text() const;
};

struct VerifyOptions {
    double q0 = 0.5;
    int M = 30;
    int N = 30;
    long samples = 2000000;
    double fd_step = 1e-4;
    uint64_t seed = 42;
    int max_degree = 2;
    double tol_residual = 1e-12;
    double tol_pairing = 1e-9;
    bool inject_failure = false;  // negative control: corrupts one fixture
};

/// Owns the derived rewrite systems and the certified frame/projection so the
/// CLI and library calls can share them.
class Engine {
public:
    Engine();

    const RewriteSystem& s7() const { return s7_; }
    const RewriteSystem& s4() const { return s4_; }
    const SUq2Algebra& su2() const { return su2_; }
    const VMatrix& v() const { return v_; }
    const Projection& projection() const { return p_; }
    const S4Generators& generators() const { return gens_; }
    const Coaction& coaction() const { return coact_; }
    const StrongConnection& connection() const { return ell_; }

    /// Normalize an expression in one of {s7, su2, s4}; returns canonical text.
    std::string normalize_expr(const std::string& algebra, const std::string& expr) const;

    // Suites. Each returns the accumulated report.
    Report run_relations(bool inject_failure = false) const;
    Report run_spheres() const;
    Report run_bundle(int max_degree) const;
    Report run_representation(double q0, int M, int N, double tol_residual,
                              double tol_pairing) const;
    Report run_classical(long samples, double fd_step, uint64_t seed) const;
    Report run_properties(uint64_t seed) const;
    Report verify_all(const VerifyOptions& opt) const;

    /// check_id coverage per acceptance-style criterion number (1-based);
    /// audited by a meta-test against verify_all output.
    static std::vector<std::pair<int, std::vector<std::string>>> criterion_coverage();

private:
    RewriteSystem s7_;
    RewriteSystem s4_;
    SUq2Algebra su2_;
    VMatrix v_;
    Projection p_;
    S4Generators gens_;
    Coaction coact_;
    StrongConnection ell_;
};

const RewriteSystem& system_by_name(const Engine& e, const std::string& algebra);

}  // namespace qhopf
