#pragma once

#include <array>
#include <map>
#include <vector>

#include "qhopf/ncalg.hpp"

namespace qhopf {

/// Index bookkeeping for the symplectic series C_n: N = 2n, the primed index
/// i' = N+1-i, the signs eps_i and the weights rho = (n, n-1, ..., 1, -1, ..., -n).
struct SymplecticData {
    explicit SymplecticData(int n);
    int n;
    int N;
    int prime(int i) const { return N + 1 - i; }
    int eps(int i) const { return i <= n ? 1 : -1; }
    int rho(int i) const { return i <= n ? n - i + 1 : -(i - n); }
};

/// Which matrix the elementary symbol e_a^b denotes when assembling R.
/// RowFirst reads e_a^b as the unit matrix with its entry at (row a, col b);
/// ColFirst reads it transposed. The derived n = 2 relations match the
/// reference tables only for RowFirst; ColFirst is kept as a regression trap.
enum class LegConvention { RowFirst, ColFirst };

/// Sparse R-matrix over Q[q,q^-1]; entry(i,j,k,l) is the coefficient mapping
/// basis e_k (x) e_l to e_i (x) e_j (all indices 1-based).
class RMatrix {
public:
    RMatrix(int dim) : dim_(dim) {}
    int dim() const { return dim_; }

    void add(int i, int j, int k, int l, const LaurentPoly& c) {
        auto key = std::array<int, 4>{i, j, k, l};
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            if (!c.is_zero()) entries_[key] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    LaurentPoly entry(int i, int j, int k, int l) const {
        auto it = entries_.find({i, j, k, l});
        return it == entries_.end() ? LaurentPoly::zero() : it->second;
    }
    const std::map<std::array<int, 4>, LaurentPoly>& entries() const { return entries_; }
    size_t nonzero_count() const { return entries_.size(); }

private:
    int dim_;
    std::map<std::array<int, 4>, LaurentPoly> entries_;
};

/// The five-term C-series R-matrix on (C_q)^N (x) (C_q)^N.
RMatrix build_r(int n, LegConvention conv = LegConvention::RowFirst);

/// Closed-form count of the nonzero entries build_r must produce.
size_t expected_r_support(int n);

/// N x N metric matrix C_i^j = q^{rho_j} eps_i delta_{i,j'}, plus its inverse.
struct CMatrix {
    explicit CMatrix(int dim) : dim(dim), entries(dim, std::vector<LaurentPoly>(dim)) {}
    int dim;
    std::vector<std::vector<LaurentPoly>> entries;
    LaurentPoly entry(int i, int j) const { return entries[i - 1][j - 1]; }
};

CMatrix build_c(int n);
CMatrix build_c_inverse(int n);

/// Exact check of R12 R13 R23 = R23 R13 R12 on (C_q)^(N^3).
struct YbeReport {
    bool ok = true;
    /// Differing components (i,j,k | a,b,c) with the residual coefficient.
    std::vector<std::pair<std::array<int, 6>, LaurentPoly>> residuals;
};
YbeReport check_ybe(const RMatrix& r);

enum class RelationFamily { XX, VV, XV, SPHERE };

const char* relation_family_name(RelationFamily f);

/// One oriented rewrite rule: leading two-letter word and its replacement.
struct Relation {
    Word lhs;
    NCPoly rhs;
};

/// The derived commutation rules for one family, sorted by leading word.
struct RelationSet {
    RelationFamily family;
    std::vector<Relation> rules;
};

/// Expands the contracted reflection identities of the chosen family over
/// build_r(n) and eliminates until every leading word has a single oriented
/// rule; replacements are fully reduced against the emitted set. Throws
/// std::logic_error if the system is inconsistent: a stuck identity (no unit
/// leading coefficient, reported with its index pair) or an emitted rule
/// whose leading word is not of the family's designated shape.
/// Supported n: 1 and 2 (the generator universe is fixed at eight letters).
RelationSet derive_relations(int n, RelationFamily family,
                             LegConvention conv = LegConvention::RowFirst);

/// Same elimination over an explicit R-matrix (exposed for negative controls).
RelationSet derive_relations_from(const RMatrix& r, int n, RelationFamily family);

/// The sphere relation sum_i xb_i x_i = 1 oriented to eliminate the largest
/// diagonal word xb_N x_N.
RelationSet sphere_relation(int n);

}  // namespace qhopf
