#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "qhopf/spheres.hpp"

namespace qhopf {

using Cplx = std::complex<double>;

/// Unit vector in C^4 (tolerance 1e-12 on the constraint).
struct S7Point {
    std::array<Cplx, 4> z;
};

/// Point of S^4 in the coordinates (x, alpha, beta), |alpha|^2 + |beta|^2 + x^2 = 1.
struct S4Point {
    double x = 0;
    Cplx alpha{0, 0};
    Cplx beta{0, 0};
};

using Mat4c = std::array<std::array<Cplx, 4>, 4>;

/// x = |z1|^2 + |z2|^2 - |z3|^2 - |z4|^2, alpha = 2(z1 conj(z3) + z2 conj(z4)),
/// beta = 2(-z1 z4 + z2 z3). Throws if z is not unit.
S4Point hopf_map(const S7Point& z);

/// Right diagonal SU(2) action z . w with w = ((w1, w2), (-conj(w2), conj(w1))).
S7Point su2_act(const S7Point& z, Cplx w1, Cplx w2);

/// The rank-2 projector 1/2 ((1+x, 0, alpha, beta), ...).
Mat4c classical_projection(const S4Point& pt);

/// Frame v(z) of the quaternionic line and its projector v v*.
Mat4c frame_projection(const S7Point& z);

struct ChernResult {
    double c2_value = 0;
    double c1_max_residual = 0;
    long samples = 0;
    double fd_step = 0;
    uint64_t seed = 0;
};

/// Monte-Carlo integral of the second Chern form over the stereographic chart
/// with central-difference derivatives; low-discrepancy (Halton) samples with
/// a seeded Cranley-Patterson rotation. c1_max_residual reports the largest
/// pointwise |tr(p (dp)^2)| component seen.
ChernResult chern_numbers(long samples, double fd_step, uint64_t seed, int threads = 0);

/// Same quadrature applied to the closed-form integrand 48/(1+|u|^2)^4 of
/// tr(p (dp)^4); an oracle for the sampling independent of any differencing.
double chern_oracle_quadrature(long samples, uint64_t seed, int threads = 0);

/// Point of the chart: p evaluated at the inverse stereographic image of u.
Mat4c chart_projection(const std::array<double, 4>& u);

/// Antisymmetrized trace density of tr(p (dp)^4) at a chart point, assembled
/// with central differences of step h; optionally reports the largest
/// |tr(p (dp)^2)| component at the same point.
double chern_integrand(const std::array<double, 4>& u, double h, double* c1_residual = nullptr);

struct GaugeCheckResult {
    bool found = false;
    std::string renaming;       // e.g. "x1 <- z1, x2 <- -z2, ..."
    double max_residual = 0;    // worst entry over the certification points
    bool t_affine_in_x = false; // t|q=1 = (1 + x)/2 under the renaming
};

/// Searches signed/conjugated coordinate renamings such that
/// D p_classical D = p_quantum|q=1 with D = diag(1,-1,1,1), then certifies the
/// winner at 20 random points.
GaugeCheckResult q1_gauge_check(const RewriteSystem& s7, const Projection& p, uint64_t seed = 7);

void classical_checks(long samples, double fd_step, uint64_t seed, const RewriteSystem& s7,
                      const Projection& p, CheckSink sink);

}  // namespace qhopf
