#include "qhopf/representation.hpp"

#include <cmath>

namespace qhopf {

OperatorSet<double> build_sigma(double q0, int M, int N) {
    if (!(q0 > 0.0 && q0 < 1.0)) throw std::domain_error("sigma requires 0 < q0 < 1");
    OperatorSet<double> set;
    set.basis = {M, N};
    set.q0 = q0;
    const TruncatedBasis& B = set.basis;
    SparseMat<double> t(B.dim()), a(B.dim()), abar(B.dim()), b(B.dim()), bbar(B.dim());
    auto qp = [&](int k) { return std::pow(q0, k); };
    for (int m = 0; m < M; ++m)
        for (int n = 0; n < N; ++n) {
            int col = B.index(m, n);
            t.add(col, col, qp(2 * m + 4 * n + 4));
            if (m + 1 < M)
                abar.add(B.index(m + 1, n), col,
                         std::sqrt(1.0 - qp(2 * m + 2)) * qp(m + 2 * n + 1));
            if (m > 0) a.add(B.index(m - 1, n), col, std::sqrt(1.0 - qp(2 * m)) * qp(m + 2 * n));
            if (n + 1 < N)
                b.add(B.index(m, n + 1), col, std::sqrt(1.0 - qp(4 * n + 4)) * qp(2 * (m + n + 2)));
            if (n > 0)
                bbar.add(B.index(m, n - 1), col, std::sqrt(1.0 - qp(4 * n)) * qp(2 * (m + n + 1)));
        }
    set.ops = {{GT, t}, {GA, a}, {GABAR, abar}, {GB, b}, {GBBAR, bbar}};
    return set;
}

OperatorSet<QSqrt> build_sigma_exact(const Rational& q0, int M, int N) {
    if (!(q0 > 0 && q0 < 1)) throw std::domain_error("sigma requires 0 < q0 < 1");
    OperatorSet<QSqrt> set;
    set.basis = {M, N};
    set.q0 = rat_to_double(q0);
    set.q0_exact = q0;
    const TruncatedBasis& B = set.basis;
    SparseMat<QSqrt> t(B.dim()), a(B.dim()), abar(B.dim()), b(B.dim()), bbar(B.dim());
    auto qp = [&](int k) { return rat_pow(q0, k); };
    const Rational one(1);
    for (int m = 0; m < M; ++m)
        for (int n = 0; n < N; ++n) {
            int col = B.index(m, n);
            t.add(col, col, QSqrt::rational(qp(2 * m + 4 * n + 4)));
            if (m + 1 < M)
                abar.add(B.index(m + 1, n), col,
                         QSqrt::root(one - qp(2 * m + 2), qp(m + 2 * n + 1)));
            if (m > 0) a.add(B.index(m - 1, n), col, QSqrt::root(one - qp(2 * m), qp(m + 2 * n)));
            if (n + 1 < N)
                b.add(B.index(m, n + 1), col,
                      QSqrt::root(one - qp(4 * n + 4), qp(2 * (m + n + 2))));
            if (n > 0)
                bbar.add(B.index(m, n - 1), col,
                         QSqrt::root(one - qp(4 * n), qp(2 * (m + n + 1))));
        }
    set.ops = {{GT, t}, {GA, a}, {GABAR, abar}, {GB, b}, {GBBAR, bbar}};
    return set;
}

OperatorSet<double> build_beta() {
    OperatorSet<double> set;
    set.basis = {1, 1};
    // all generators act as zero; q0 only scales relation coefficients
    set.q0 = 0.5;
    SparseMat<double> zero(1);
    set.ops = {{GT, zero}, {GA, zero}, {GABAR, zero}, {GB, zero}, {GBBAR, zero}};
    return set;
}

namespace {

/// Evaluates an abstract A(S^4_q) polynomial as an operator, with the Laurent
/// coefficients specialized at q0.
template <typename T, typename CoeffEval>
SparseMat<T> evaluate_relation(const NCPoly& rel, const std::map<GenId, SparseMat<T>>& ops,
                               int dim, CoeffEval coeff) {
    SparseMat<T> acc(dim);
    std::map<int, std::map<int, T>> acc_map;
    for (const auto& [w, c] : rel.terms()) {
        // propagate each basis column through the word, right to left
        for (int j = 0; j < dim; ++j) {
            std::map<int, T> vec;
            vec[j] = coeff(LaurentPoly::one());
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                const SparseMat<T>& op = ops.at(static_cast<GenId>(static_cast<unsigned char>(*it)));
                std::map<int, T> next;
                for (const auto& [r, v] : vec)
                    for (const auto& [r2, v2] : op.cols[r]) next[r2] += v2 * v;
                vec = std::move(next);
            }
            T cval = coeff(c);
            for (const auto& [r, v] : vec) acc_map[j][r] += cval * v;
        }
    }
    for (const auto& [j, colmap] : acc_map)
        for (const auto& [r, v] : colmap)
            if (!(v == T{})) acc.cols[j].push_back({r, v});
    return acc;
}

}  // namespace

std::vector<RelationResidual> verify_relations_numeric(const OperatorSet<double>& ops) {
    std::vector<RelationResidual> out;
    const TruncatedBasis& B = ops.basis;
    for (const auto& [name, rel] : s4_defining_relations()) {
        SparseMat<double> resid = evaluate_relation<double>(
            rel, ops.ops, B.dim(), [&](const LaurentPoly& c) { return c.eval(ops.q0); });
        RelationResidual rr;
        rr.name = name;
        for (int m = 0; m + 2 < B.M; ++m)
            for (int n = 0; n + 2 < B.N; ++n)
                for (const auto& [r, v] : resid.cols[B.index(m, n)])
                    rr.max_residual = std::max(rr.max_residual, std::abs(v));
        // The one-dimensional beta representation has a single (boundary-free)
        // basis vector; cover it when the window is degenerate.
        if (B.M <= 2 || B.N <= 2)
            for (int j = 0; j < B.dim(); ++j)
                for (const auto& [r, v] : resid.cols[j])
                    rr.max_residual = std::max(rr.max_residual, std::abs(v));
        out.push_back(rr);
    }
    return out;
}

std::vector<RelationResidual> verify_relations_exact(const OperatorSet<QSqrt>& ops) {
    std::vector<RelationResidual> out;
    const TruncatedBasis& B = ops.basis;
    for (const auto& [name, rel] : s4_defining_relations()) {
        SparseMat<QSqrt> resid = evaluate_relation<QSqrt>(
            rel, ops.ops, B.dim(),
            [&](const LaurentPoly& c) { return QSqrt::rational(c.eval(ops.q0_exact)); });
        RelationResidual rr;
        rr.name = name;
        for (int m = 0; m + 2 < B.M; ++m)
            for (int n = 0; n + 2 < B.N; ++n)
                for (const auto& [r, v] : resid.cols[B.index(m, n)])
                    if (!v.is_zero()) rr.exact_zero = false;
        out.push_back(rr);
    }
    return out;
}

TraceReport trace_report(const OperatorSet<double>& ops) {
    TraceReport rep;
    const TruncatedBasis& B = ops.basis;
    const double q0 = ops.q0;
    auto qp = [&](int k) { return std::pow(q0, k); };
    for (int m = 0; m < B.M; ++m)
        for (int n = 0; n < B.N; ++n) {
            rep.trace_t += qp(2 * m + 4 * n + 4);
            rep.trace_abs_a += std::sqrt(1.0 - qp(2 * m)) * qp(m + 2 * n);
            rep.trace_abs_b += std::sqrt(1.0 - qp(4 * n + 4)) * qp(2 * (m + n + 2));
        }
    rep.trace_t_formula = qp(4) * (1.0 - qp(2 * B.M)) / (1.0 - qp(2)) * (1.0 - qp(4 * B.N)) /
                          (1.0 - qp(4));
    rep.trace_t_closed = qp(4) / ((1.0 - qp(2)) * (1.0 - qp(4)));
    rep.trace_abs_a_bound = q0 / ((1.0 - q0) * (1.0 - qp(2)));
    rep.trace_abs_b_bound = qp(4) / ((1.0 - qp(2)) * (1.0 - qp(2)));
    return rep;
}

bool trace_formula_exact(const Rational& q0, int M, int N) {
    Rational sum(0);
    for (int m = 0; m < M; ++m)
        for (int n = 0; n < N; ++n) sum += rat_pow(q0, 2 * m + 4 * n + 4);
    Rational formula = rat_pow(q0, 4) * (Rational(1) - rat_pow(q0, 2 * M)) /
                       (Rational(1) - rat_pow(q0, 2)) * (Rational(1) - rat_pow(q0, 4 * N)) /
                       (Rational(1) - rat_pow(q0, 4));
    return sum == formula;
}

bool trace_tail_within_bound(const Rational& q0, int M, int N, Rational* gap_out) {
    Rational closed = rat_pow(q0, 4) / ((Rational(1) - rat_pow(q0, 2)) *
                                        (Rational(1) - rat_pow(q0, 4)));
    Rational truncated = closed * (Rational(1) - rat_pow(q0, 2 * M)) *
                         (Rational(1) - rat_pow(q0, 4 * N));
    Rational gap = closed - truncated;
    if (gap < 0) gap = -gap;
    if (gap_out) *gap_out = gap;
    return gap < Rational(10) * rat_pow(q0, 2 * M);
}

PairingReport index_pairing(double q0, int M, int N, bool exact_mode) {
    PairingReport rep;
    rep.q0 = q0;
    rep.M = M;
    rep.N = N;
    rep.exact_mode = exact_mode;
    auto qp = [&](int k) { return std::pow(q0, k); };

    // ch_0(p) = 2 - q^-4 (1-q^2)(1-q^4) t. The beta leg of tau^1 kills the
    // constant (tau^1(1) = 0) and beta(t) = 0, so only Tr(sigma(t)) enters.
    const double prefactor = -qp(-4) * (1.0 - qp(2)) * (1.0 - qp(4));
    if (exact_mode) {
        // Rational q0 path: the truncated trace as an exact rational.
        Rational q0r(q0);  // exact binary double -> rational is fine for dyadic inputs
        Rational sum(0);
        for (int m = 0; m < M; ++m)
            for (int n = 0; n < N; ++n) sum += rat_pow(q0r, 2 * m + 4 * n + 4);
        Rational pre = -rat_pow(q0r, -4) * (Rational(1) - rat_pow(q0r, 2)) *
                       (Rational(1) - rat_pow(q0r, 4));
        rep.trace_t = rat_to_double(sum);
        rep.pairing_value = rat_to_double(pre * sum);
    } else {
        OperatorSet<double> sigma = build_sigma(q0, M, N);
        double tr = 0;
        for (int j = 0; j < sigma.basis.dim(); ++j)
            for (const auto& [r, v] : sigma.ops.at(GT).cols[j])
                if (r == j) tr += v;
        rep.trace_t = tr;
        rep.pairing_value = prefactor * tr;
    }
    rep.closed_form = qp(4) / ((1.0 - qp(2)) * (1.0 - qp(4)));
    rep.tau0_value = 2.0;       // tau^0(ch_0(p)) = beta(2 - ... t) = 2
    rep.trivial_pairing = 0.0;  // tau^1(ch_0(1)) = tau^1(1) = 0
    rep.truncation_error_bound = qp(2 * M) + qp(4 * N);
    return rep;
}

void representation_checks(double q0, int M, int N, double tol_residual, double tol_pairing,
                           CheckSink sink) {
    auto emit = [&](const std::string& id, const std::string& desc, bool ok,
                    const std::string& residual = std::string()) {
        CheckResult r;
        r.id = id;
        r.description = desc;
        r.ok = ok;
        r.residual = ok ? std::string() : residual;
        sink(std::move(r));
    };

    OperatorSet<double> sigma = build_sigma(q0, M, N);
    for (const auto& rr : verify_relations_numeric(sigma))
        emit("rep.sigma." + rr.name, "sigma residual of " + rr.name,
             rr.max_residual < tol_residual, std::to_string(rr.max_residual));

    OperatorSet<double> beta = build_beta();
    for (const auto& rr : verify_relations_numeric(beta))
        emit("rep.beta." + rr.name, "beta residual of " + rr.name, rr.max_residual == 0.0,
             std::to_string(rr.max_residual));

    Rational q0r(q0);
    OperatorSet<QSqrt> sigma_exact = build_sigma_exact(q0r, M, N);
    for (const auto& rr : verify_relations_exact(sigma_exact))
        emit("rep.exact." + rr.name, "exact-arithmetic residual of " + rr.name, rr.exact_zero,
             "nonzero exact residual");

    TraceReport tr = trace_report(sigma);
    Rational gap;
    emit("rep.trace.t", "truncated Tr(t) within the tail bound of the closed form",
         trace_tail_within_bound(q0r, M, N, &gap), rat_to_string(gap));
    emit("rep.trace.formula", "truncated Tr(t) equals the exact geometric sum",
         trace_formula_exact(q0r, M, N), "mismatch");
    emit("rep.trace.abs_a", "Tr|a| below its closed bound", tr.trace_abs_a <= tr.trace_abs_a_bound,
         std::to_string(tr.trace_abs_a));
    emit("rep.trace.abs_b", "Tr|b| below its closed bound", tr.trace_abs_b <= tr.trace_abs_b_bound,
         std::to_string(tr.trace_abs_b));

    PairingReport pr = index_pairing(q0, M, N);
    emit("rep.pairing.value", "index pairing equals -1 within tolerance",
         std::abs(pr.pairing_value + 1.0) < tol_pairing, std::to_string(pr.pairing_value));
    emit("rep.pairing.tau0", "tau^0 pairing equals 2 exactly", pr.tau0_value == 2.0,
         std::to_string(pr.tau0_value));
    emit("rep.pairing.trivial", "pairing with the trivial idempotent is 0",
         pr.trivial_pairing == 0.0, std::to_string(pr.trivial_pairing));
}

}  // namespace qhopf
