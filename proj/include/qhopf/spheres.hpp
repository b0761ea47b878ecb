#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qhopf/rmatrix.hpp"

namespace qhopf {

/// Outcome of one certified identity; residual is empty when the check holds.
struct CheckResult {
    std::string id;
    std::string description;
    bool ok = true;
    std::string residual;
};

using CheckSink = std::function<void(CheckResult)>;

/// The quotient A(S^7_q): all four derived rule families plus the sphere rule.
/// Deriving the 29 rules takes a moment, so share one instance where possible.
RewriteSystem make_s7_system();

/// Abstract presentation of A(S^4_q) on {t, abar, a, bbar, b}.
RewriteSystem make_s4_system();

/// 4 x 2 matrix over A(S^7_q) with v* v = I_2.
struct VMatrix {
    NCPoly m[4][2];
};

/// 4 x 4 matrix of normalized NCPoly entries.
struct Projection {
    NCPoly p[4][4];
};

struct S4Generators {
    NCPoly t, a, abar, b, bbar;
};

/// The orthonormal frame of the instanton projection. Throws std::logic_error
/// naming (i,j) if an inner-product identity <phi_i|phi_j> = delta_ij fails.
VMatrix build_v(const RewriteSystem& s7);

/// p = v v*, entrywise normalized; verifies the closed form with diagonal
/// (q^-2 t, t, 1 - q^-4 t, 1 - q^2 t). Throws naming the mismatched entry.
Projection build_projection(const RewriteSystem& s7, const VMatrix& v);

/// t = p22, a = p13, b = p14 and their stars.
S4Generators extract_s4_generators(const Projection& p);

/// Matrix star-transpose entrywise.
Projection projection_star(const Projection& p);

// Check suites; each emits CheckResult records through the sink.
void check_projection_identities(const RewriteSystem& s7, const Projection& p, CheckSink sink);
void verify_s4_relations(const RewriteSystem& s7, const S4Generators& g, CheckSink sink);
void naive_projection_checks(const RewriteSystem& s7, CheckSink sink);
void plucker_check(const RewriteSystem& s7, const VMatrix& v, const S4Generators& g,
                   CheckSink sink);
void q_inverse_iso_check(const RewriteSystem& s4, CheckSink sink);
/// Cross-check of the abstract A(S^4_q) presentation against the embedding.
void s4_abstract_vs_embedded_check(const RewriteSystem& s7, const RewriteSystem& s4,
                                   const S4Generators& g, CheckSink sink);

/// The defining relations of A(S^4_q) as zero elements (L - R) in the
/// abstract generators: the four swap relations, their conjugates and the
/// three sphere relations. Used by the isomorphism check and the tests.
std::vector<std::pair<std::string, NCPoly>> s4_defining_relations();

/// Naive frame from the first/last columns of T (extra generators at q != 1).
VMatrix build_naive_v();

}  // namespace qhopf
