#include <cmath>

#include "doctest.h"
#include "qhopf/representation.hpp"

using namespace qhopf;

namespace {

double entry(const SparseMat<double>& m, int row, int col) {
    for (const auto& [r, v] : m.cols[col])
        if (r == row) return v;
    return 0.0;
}

}  // namespace

TEST_CASE("sigma action on the highest weight vector") {
    const double q0 = 0.5;
    OperatorSet<double> s = build_sigma(q0, 6, 6);
    const TruncatedBasis& B = s.basis;
    int v00 = B.index(0, 0);
    // t|0,0> = q^4 |0,0>
    CHECK(entry(s.ops.at(GT), v00, v00) == doctest::Approx(std::pow(q0, 4)).epsilon(1e-15));
    // a|0,0> = 0 and bbar|0,0> = 0
    CHECK(s.ops.at(GA).cols[v00].empty());
    CHECK(s.ops.at(GBBAR).cols[v00].empty());
    // b|0,0> = (1 - q^4)^(1/2) q^4 |0,1>
    CHECK(entry(s.ops.at(GB), B.index(0, 1), v00) ==
          doctest::Approx(std::sqrt(1 - std::pow(q0, 4)) * std::pow(q0, 4)).epsilon(1e-14));
    CHECK_THROWS_AS(build_sigma(1.5, 4, 4), std::domain_error);
}

TEST_CASE("t spectrum is the two-parameter geometric family") {
    const double q0 = 0.5;
    OperatorSet<double> s = build_sigma(q0, 5, 5);
    for (int m = 0; m < 5; ++m)
        for (int n = 0; n < 5; ++n)
            CHECK(entry(s.ops.at(GT), s.basis.index(m, n), s.basis.index(m, n)) ==
                  doctest::Approx(std::pow(q0, 2 * m + 4 * n + 4)).epsilon(1e-15));
}

TEST_CASE("adjointness on the interior") {
    OperatorSet<double> s = build_sigma(0.5, 8, 8);
    const TruncatedBasis& B = s.basis;
    const auto& a = s.ops.at(GA);
    const auto& abar = s.ops.at(GABAR);
    const auto& b = s.ops.at(GB);
    const auto& bbar = s.ops.at(GBBAR);
    for (int i = 0; i < B.dim(); ++i)
        for (int j = 0; j < B.dim(); ++j) {
            auto [mi, ni] = B.coords(i);
            auto [mj, nj] = B.coords(j);
            if (mi >= B.M - 1 || mj >= B.M - 1 || ni >= B.N - 1 || nj >= B.N - 1) continue;
            CHECK(entry(a, i, j) == doctest::Approx(entry(abar, j, i)).epsilon(1e-14));
            CHECK(entry(b, i, j) == doctest::Approx(entry(bbar, j, i)).epsilon(1e-14));
        }
}

TEST_CASE("defining relations hold numerically on the interior") {
    OperatorSet<double> s = build_sigma(0.5, 14, 14);
    for (const auto& rr : verify_relations_numeric(s)) {
        INFO(rr.name);
        CHECK(rr.max_residual < 1e-12);
    }
}

TEST_CASE("beta representation is identically zero and satisfies everything") {
    OperatorSet<double> beta = build_beta();
    for (const auto& rr : verify_relations_numeric(beta)) CHECK(rr.max_residual == 0.0);
}

TEST_CASE("exact rational cross-check eliminates floating error") {
    OperatorSet<QSqrt> s = build_sigma_exact(rat(1, 2), 10, 10);
    for (const auto& rr : verify_relations_exact(s)) {
        INFO(rr.name);
        CHECK(rr.exact_zero);
    }
}

TEST_CASE("recursion coefficients of the normalizations") {
    // a_{m,n+1} = q^2 a_{m,n} and b_{m+1,n} = q^2 b_{m,n} on the built shifts
    const double q0 = 0.5;
    OperatorSet<double> s = build_sigma(q0, 7, 7);
    const TruncatedBasis& B = s.basis;
    for (int m = 1; m < 6; ++m)
        for (int n = 0; n < 5; ++n) {
            double amn = entry(s.ops.at(GA), B.index(m - 1, n), B.index(m, n));
            double amn1 = entry(s.ops.at(GA), B.index(m - 1, n + 1), B.index(m, n + 1));
            CHECK(amn1 == doctest::Approx(q0 * q0 * amn).epsilon(1e-13));
        }
    for (int m = 0; m < 5; ++m)
        for (int n = 1; n < 5; ++n) {
            double bmn = entry(s.ops.at(GBBAR), B.index(m, n - 1), B.index(m, n));
            double bm1n = entry(s.ops.at(GBBAR), B.index(m + 1, n - 1), B.index(m + 1, n));
            CHECK(bm1n == doctest::Approx(q0 * q0 * bmn).epsilon(1e-13));
        }
}

TEST_CASE("trace report against closed forms") {
    OperatorSet<double> s = build_sigma(0.5, 30, 30);
    TraceReport tr = trace_report(s);
    // the tail gap is of order q0^60 and must be compared exactly
    Rational gap;
    CHECK(trace_tail_within_bound(rat(1, 2), 30, 30, &gap));
    CHECK(gap > 0);
    CHECK(std::abs(tr.trace_t - tr.trace_t_formula) < 1e-15);
    CHECK(tr.trace_abs_a <= tr.trace_abs_a_bound);
    CHECK(tr.trace_abs_b <= tr.trace_abs_b_bound);
    CHECK(trace_formula_exact(rat(1, 2), 30, 30));
    // M = N = 1: single basis vector, Tr(t) = q0^4 exactly
    OperatorSet<double> tiny = build_sigma(0.5, 1, 1);
    CHECK(trace_report(tiny).trace_t == doctest::Approx(std::pow(0.5, 4)).epsilon(1e-16));
}

TEST_CASE("index pairing hits -1 within the truncation bound") {
    PairingReport r = index_pairing(0.5, 30, 30);
    CHECK(std::abs(r.pairing_value + 1.0) < 1e-9);
    CHECK(std::abs(r.pairing_value + 1.0) <= r.truncation_error_bound + 1e-15);
    CHECK(r.tau0_value == 2.0);
    CHECK(r.trivial_pairing == 0.0);

    PairingReport ex = index_pairing(0.5, 30, 30, true);
    CHECK(std::abs(ex.pairing_value + 1.0) < 1e-9);
}

TEST_CASE("pairing converges monotonically in the truncation") {
    double prev = -2.0;
    for (int M : {5, 10, 15, 20}) {
        PairingReport r = index_pairing(0.5, M, M);
        bool monotone = prev == -2.0 || r.pairing_value < prev;
        CHECK(monotone);
        // approaches -1 from above in absolute distance
        if (prev != -2.0) CHECK(std::abs(r.pairing_value + 1.0) < std::abs(prev + 1.0));
        prev = r.pairing_value;
    }
}
