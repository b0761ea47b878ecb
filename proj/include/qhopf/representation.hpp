#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhopf/spheres.hpp"

namespace qhopf {

/// Rectangular truncation of the sigma-representation space: basis |m,n>,
/// 0 <= m < M, 0 <= n < N, enumerated row-major (m outer).
struct TruncatedBasis {
    int M, N;
    int dim() const { return M * N; }
    int index(int m, int n) const { return m * N + n; }
    std::pair<int, int> coords(int idx) const { return {idx / N, idx % N}; }
};

/// Column-sparse matrix: cols[j] lists (row, value) of the j-th column.
template <typename T>
struct SparseMat {
    explicit SparseMat(int dim = 0) : dim(dim), cols(dim) {}
    int dim;
    std::vector<std::vector<std::pair<int, T>>> cols;

    void add(int row, int col, const T& v) { cols[col].push_back({row, v}); }

    friend SparseMat mul(const SparseMat& a, const SparseMat& b) {
        SparseMat out(a.dim);
        for (int j = 0; j < b.dim; ++j) {
            std::map<int, T> acc;
            for (const auto& [r, v] : b.cols[j])
                for (const auto& [r2, v2] : a.cols[r]) acc[r2] += v2 * v;
            for (auto& [r, v] : acc)
                if (!(v == T{})) out.cols[j].push_back({r, v});
        }
        return out;
    }
};

/// Value c * sqrt(r) sums with rational c and rational radicand r >= 0;
/// sqrt(r1)*sqrt(r2) is keyed at the rational r1*r2 (equal radicands square
/// to the rational part), so quadratic relation residuals cancel exactly.
struct QSqrt {
    std::map<Rational, Rational> parts;  // radicand -> coefficient

    QSqrt() = default;
    static QSqrt rational(const Rational& c) {
        QSqrt v;
        if (c != 0) v.parts[Rational(1)] = c;
        return v;
    }
    static QSqrt root(const Rational& radicand, const Rational& coeff) {
        QSqrt v;
        if (coeff != 0 && radicand != 0) {
            if (radicand == 1)
                v.parts[Rational(1)] = coeff;
            else
                v.parts[radicand] = coeff;
        }
        return v;
    }
    bool is_zero() const { return parts.empty(); }
    friend bool operator==(const QSqrt& a, const QSqrt& b) { return a.parts == b.parts; }
    QSqrt& operator+=(const QSqrt& o) {
        for (const auto& [r, c] : o.parts) {
            auto it = parts.find(r);
            if (it == parts.end()) {
                parts[r] = c;
            } else {
                it->second += c;
                if (it->second == 0) parts.erase(it);
            }
        }
        return *this;
    }
    friend QSqrt operator*(const QSqrt& a, const QSqrt& b) {
        QSqrt out;
        for (const auto& [ra, ca] : a.parts)
            for (const auto& [rb, cb] : b.parts) {
                if (ra == rb)
                    out += rational(ca * cb * ra);
                else
                    out += root(ra * rb, ca * cb);
            }
        return out;
    }
    friend QSqrt operator-(const QSqrt& a) {
        QSqrt out;
        for (const auto& [r, c] : a.parts) out.parts[r] = -c;
        return out;
    }
};

/// The five generator operators of one representation at numeric q0.
template <typename T>
struct OperatorSet {
    TruncatedBasis basis;
    double q0 = 0;          // informational; exact mode carries q0_exact
    Rational q0_exact;
    std::map<GenId, SparseMat<T>> ops;  // keys GT, GA, GABAR, GB, GBBAR
};

/// The infinite-dimensional representation truncated to the window; shifts
/// leaving the window produce zero. Requires 0 < q0 < 1.
OperatorSet<double> build_sigma(double q0, int M, int N);
OperatorSet<QSqrt> build_sigma_exact(const Rational& q0, int M, int N);
/// The one-dimensional representation with t = a = b = 0.
OperatorSet<double> build_beta();

struct RelationResidual {
    std::string name;
    double max_residual = 0;   // float mode
    bool exact_zero = true;    // exact mode
};

/// Evaluates every defining relation of A(S^4_q) as an operator residual on
/// the interior columns {|m,n> : m < M-2, n < N-2} and reports the max norm.
std::vector<RelationResidual> verify_relations_numeric(const OperatorSet<double>& ops);
std::vector<RelationResidual> verify_relations_exact(const OperatorSet<QSqrt>& ops);

struct TraceReport {
    double trace_t = 0;             // truncated Tr(t)
    double trace_t_formula = 0;     // exact truncated geometric sum
    double trace_t_closed = 0;      // q0^4 / ((1-q0^2)(1-q0^4))
    double trace_abs_a = 0;
    double trace_abs_a_bound = 0;   // q0 / ((1-q0)(1-q0^2))
    double trace_abs_b = 0;
    double trace_abs_b_bound = 0;   // q0^4 / (1-q0^2)^2
};
TraceReport trace_report(const OperatorSet<double>& ops);
/// Exact check that the truncated Tr(t) equals the closed truncated sum.
bool trace_formula_exact(const Rational& q0, int M, int N);
/// Exact check |Tr(t) - q0^4/((1-q0^2)(1-q0^4))| < 10 q0^{2M}; the gap is of
/// order q0^{2M} closed_form, far below double rounding, so the comparison is
/// carried out in rational arithmetic.
bool trace_tail_within_bound(const Rational& q0, int M, int N, Rational* gap_out = nullptr);

struct PairingReport {
    double q0 = 0;
    int M = 0, N = 0;
    double trace_t = 0;
    double closed_form = 0;        // untruncated Tr(t)
    double pairing_value = 0;      // tau^1 pairing with ch_0(p)
    double tau0_value = 0;         // tau^0 pairing with ch_0(p); exactly 2
    double trivial_pairing = 0;    // tau^1 pairing with ch_0(1); exactly 0
    double truncation_error_bound = 0;  // q0^{2M} c1 + q0^{4N} c2
    bool exact_mode = false;
};

/// The K-homology/K-theory pairing computed from the degree-zero Chern
/// characters: pairing = -q0^-4 (1-q0^2)(1-q0^4) Tr(sigma(t)).
PairingReport index_pairing(double q0, int M, int N, bool exact_mode = false);

void representation_checks(double q0, int M, int N, double tol_residual, double tol_pairing,
                           CheckSink sink);

}  // namespace qhopf
