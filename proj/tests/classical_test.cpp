#include <cmath>
#include <random>

#include "doctest.h"
#include "qhopf/classical.hpp"

using namespace qhopf;

namespace {

S7Point unit_point(std::initializer_list<Cplx> zs) {
    S7Point z;
    int i = 0;
    for (const Cplx& c : zs) z.z[i++] = c;
    return z;
}

S7Point random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    S7Point z;
    double n2 = 0;
    for (auto& c : z.z) {
        c = Cplx(gauss(rng), gauss(rng));
        n2 += std::norm(c);
    }
    for (auto& c : z.z) c /= std::sqrt(n2);
    return z;
}

}  // namespace

TEST_CASE("hopf map at the poles") {
    S4Point p = hopf_map(unit_point({1, 0, 0, 0}));
    CHECK(p.x == doctest::Approx(1.0));
    CHECK(std::abs(p.alpha) < 1e-15);
    CHECK(std::abs(p.beta) < 1e-15);
    S4Point m = hopf_map(unit_point({0, 0, 1, 0}));
    CHECK(m.x == doctest::Approx(-1.0));
    CHECK_THROWS_AS(hopf_map(unit_point({1, 1, 0, 0})), std::domain_error);
}

TEST_CASE("hopf map is SU(2) invariant") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> uni(-1, 1);
    for (int i = 0; i < 40; ++i) {
        S7Point z = random_unit(rng);
        Cplx w1(uni(rng), uni(rng)), w2(uni(rng), uni(rng));
        double n = std::sqrt(std::norm(w1) + std::norm(w2));
        w1 /= n;
        w2 /= n;
        S4Point a = hopf_map(z), b = hopf_map(su2_act(z, w1, w2));
        CHECK(std::abs(a.x - b.x) < 1e-12);
        CHECK(std::abs(a.alpha - b.alpha) < 1e-12);
        CHECK(std::abs(a.beta - b.beta) < 1e-12);
    }
}

TEST_CASE("classical projection properties") {
    S4Point north;
    north.x = 1;
    Mat4c p = classical_projection(north);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double want = (i == j && i < 2) ? 1.0 : 0.0;
            CHECK(std::abs(p[i][j] - Cplx(want, 0)) < 1e-15);
        }

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        S7Point z = random_unit(rng);
        Mat4c pc = classical_projection(hopf_map(z));
        Cplx tr = pc[0][0] + pc[1][1] + pc[2][2] + pc[3][3];
        CHECK(std::abs(tr - Cplx(2, 0)) < 1e-12);
        Mat4c pf = frame_projection(z);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                CHECK(std::abs(pf[i][j] - pc[i][j]) < 1e-12);
                // idempotent
                Cplx acc{};
                for (int k = 0; k < 4; ++k) acc += pc[i][k] * pc[k][j];
                CHECK(std::abs(acc - pc[i][j]) < 1e-12);
            }
    }
}

TEST_CASE("chart integrand matches the closed form 48/(1+r^2)^4") {
    // The analytic second Chern form of this projection pulls back to a
    // rotationally invariant density; central differences must reproduce it.
    auto closed = [](const std::array<double, 4>& u) {
        double r2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
        double d = 1 + r2;
        return 48.0 / (d * d * d * d);
    };
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    for (int i = 0; i < 12; ++i) {
        std::array<double, 4> u = {uni(rng), uni(rng), uni(rng), uni(rng)};
        double c1 = 1;
        double acc = chern_integrand(u, 1e-4, &c1);
        CHECK(acc == doctest::Approx(closed(u)).epsilon(1e-5));
        CHECK(c1 < 1e-6);
    }
}

TEST_CASE("integrand is invariant under chart rotations") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> uni(-1.5, 1.5);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    for (int trial = 0; trial < 8; ++trial) {
        std::array<double, 4> u = {uni(rng), uni(rng), uni(rng), uni(rng)};
        // random Givens rotation in a coordinate plane
        int i = trial % 4, j = (trial + 1) % 4;
        double th = angle(rng), c = std::cos(th), s = std::sin(th);
        std::array<double, 4> ru = u;
        ru[i] = c * u[i] - s * u[j];
        ru[j] = s * u[i] + c * u[j];
        CHECK(chern_integrand(ru, 1e-4) ==
              doctest::Approx(chern_integrand(u, 1e-4)).epsilon(1e-6));
    }
}

TEST_CASE("finite-difference bias shrinks as h^2") {
    std::array<double, 4> u = {0.4, -0.8, 1.1, 0.3};
    double r2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
    double exact = 48.0 / std::pow(1 + r2, 4);
    double e1 = std::abs(chern_integrand(u, 2e-3) - exact);
    double e2 = std::abs(chern_integrand(u, 1e-3) - exact);
    CHECK(e2 < e1 / 3.0);  // central differences: factor ~4 expected
}

TEST_CASE("quasi-random error shrinks with the sample budget") {
    double e_small = std::abs(chern_oracle_quadrature(40000, 5) + 1.0);
    double e_large = std::abs(chern_oracle_quadrature(640000, 5) + 1.0);
    CHECK(e_large < e_small);
}

TEST_CASE("oracle quadrature of the closed form reproduces -1") {
    double c2 = chern_oracle_quadrature(400000, 42);
    CHECK(std::abs(c2 + 1.0) < 0.03);
}

TEST_CASE("chern numbers from finite differences (reduced sample smoke run)") {
    ChernResult r = chern_numbers(150000, 1e-4, 42);
    CHECK(std::abs(r.c2_value + 1.0) < 0.1);
    CHECK(r.c1_max_residual < 1e-6);
}

TEST_CASE("chern sampling is deterministic for a fixed seed") {
    ChernResult a = chern_numbers(50000, 1e-4, 7, 1);
    ChernResult b = chern_numbers(50000, 1e-4, 7, 2);
    CHECK(a.c2_value == b.c2_value);  // bitwise, independent of thread count
    ChernResult c = chern_numbers(50000, 1e-4, 8);
    CHECK(a.c2_value != c.c2_value);  // different rotation
}

TEST_CASE("gauge equivalence at q = 1") {
    RewriteSystem s7 = make_s7_system();
    VMatrix v = build_v(s7);
    Projection p = build_projection(s7, v);
    GaugeCheckResult g = q1_gauge_check(s7, p, 123);
    CHECK(g.found);
    CHECK(g.max_residual < 1e-12);
    CHECK(g.t_affine_in_x);
    CHECK(!g.renaming.empty());
}
