#include "qhopf/classical.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

namespace qhopf {

namespace {

constexpr double kPi = 3.14159265358979323846;

double norm2(const S7Point& z) {
    double s = 0;
    for (const auto& c : z.z) s += std::norm(c);
    return s;
}

Mat4c mat_mul(const Mat4c& a, const Mat4c& b) {
    Mat4c r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const Cplx aik = a[i][k];
            if (aik == Cplx(0, 0)) continue;
            for (int j = 0; j < 4; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

Cplx mat_trace_prod(const Mat4c& a, const Mat4c& b) {
    Cplx t{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t += a[i][j] * b[j][i];
    return t;
}

Cplx mat_trace(const Mat4c& a) { return a[0][0] + a[1][1] + a[2][2] + a[3][3]; }

/// Radical-inverse (van der Corput) value of index i in the given base.
double radical_inverse(uint64_t i, uint32_t base) {
    double inv = 1.0 / base, f = inv, x = 0.0;
    while (i) {
        x += (i % base) * f;
        i /= base;
        f *= inv;
    }
    return x;
}

}  // namespace

S4Point hopf_map(const S7Point& z) {
    if (std::abs(norm2(z) - 1.0) > 1e-12) throw std::domain_error("hopf_map: input not unit");
    const Cplx z1 = z.z[0], z2 = z.z[1], z3 = z.z[2], z4 = z.z[3];
    S4Point p;
    p.x = std::norm(z1) + std::norm(z2) - std::norm(z3) - std::norm(z4);
    p.alpha = 2.0 * (z1 * std::conj(z3) + z2 * std::conj(z4));
    p.beta = 2.0 * (-z1 * z4 + z2 * z3);
    return p;
}

S7Point su2_act(const S7Point& z, Cplx w1, Cplx w2) {
    S7Point r;
    r.z[0] = z.z[0] * w1 - z.z[1] * std::conj(w2);
    r.z[1] = z.z[0] * w2 + z.z[1] * std::conj(w1);
    r.z[2] = z.z[2] * w1 - z.z[3] * std::conj(w2);
    r.z[3] = z.z[2] * w2 + z.z[3] * std::conj(w1);
    return r;
}

Mat4c classical_projection(const S4Point& pt) {
    const double x = pt.x;
    const Cplx a = pt.alpha, b = pt.beta;
    Mat4c p{};
    p[0][0] = 0.5 * (1 + x);
    p[0][2] = 0.5 * a;
    p[0][3] = 0.5 * b;
    p[1][1] = 0.5 * (1 + x);
    p[1][2] = -0.5 * std::conj(b);
    p[1][3] = 0.5 * std::conj(a);
    p[2][0] = 0.5 * std::conj(a);
    p[2][1] = -0.5 * b;
    p[2][2] = 0.5 * (1 - x);
    p[3][0] = 0.5 * std::conj(b);
    p[3][1] = 0.5 * a;
    p[3][3] = 0.5 * (1 - x);
    return p;
}

Mat4c frame_projection(const S7Point& z) {
    const Cplx v[4][2] = {{z.z[0], z.z[1]},
                          {-std::conj(z.z[1]), std::conj(z.z[0])},
                          {z.z[2], z.z[3]},
                          {-std::conj(z.z[3]), std::conj(z.z[2])}};
    Mat4c p{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            p[i][j] = v[i][0] * std::conj(v[j][0]) + v[i][1] * std::conj(v[j][1]);
    return p;
}

Mat4c chart_projection(const std::array<double, 4>& u) {
    const double r2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
    const double s = 2.0 / (1.0 + r2);
    S4Point pt;
    pt.x = (1.0 - r2) / (1.0 + r2);
    // Coordinate order fixes the chart orientation: with beta = s(u4 + i u3)
    // the pullback of the round volume form is +16/(1+r^2)^4 du^1..du^4 and
    // the measured tr(p (dp)^4) density is the positive multiple 3 vol.
    pt.alpha = Cplx(s * u[0], s * u[1]);
    pt.beta = Cplx(s * u[3], s * u[2]);
    return classical_projection(pt);
}

namespace {

struct SampleStats {
    double sum = 0;      // Kahan-compensated chunk sum of A(u) * jacobian
    double comp = 0;
    double c1_max = 0;

    void add(double v) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

/// Integrand of tr(p (dp)^4) at the chart point, with the c1 residual.
void integrand_at(const std::array<double, 4>& u, double h, double& a_value, double& c1_res) {
    Mat4c p = chart_projection(u);
    Mat4c dp[4];
    for (int d = 0; d < 4; ++d) {
        std::array<double, 4> up = u, um = u;
        up[d] += h;
        um[d] -= h;
        Mat4c pp = chart_projection(up), pm = chart_projection(um);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) dp[d][i][j] = (pp[i][j] - pm[i][j]) / (2.0 * h);
    }
    Mat4c t[4][4], pt[4][4];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            t[a][b] = mat_mul(dp[a], dp[b]);
            pt[a][b] = mat_mul(p, t[a][b]);
        }

    c1_res = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            c1_res = std::max(c1_res,
                              std::abs(mat_trace(pt[a][b]) - mat_trace(pt[b][a])));

    static constexpr int perms[24][4] = {
        {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
        {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
        {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
        {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
    static constexpr int signs[24] = {+1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1,
                                      +1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1};
    double acc = 0;
    for (int k = 0; k < 24; ++k) {
        const int* pm = perms[k];
        Cplx tr = mat_trace_prod(pt[pm[0]][pm[1]], t[pm[2]][pm[3]]);
        acc += signs[k] * tr.real();
    }
    a_value = acc;
}

struct QmcShift {
    double s[4];
    explicit QmcShift(uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (double& v : s) v = uni(rng);
    }
};

std::array<double, 4> qmc_point(uint64_t index, const QmcShift& shift) {
    static constexpr uint32_t bases[4] = {2, 3, 5, 7};
    std::array<double, 4> xi{};
    for (int d = 0; d < 4; ++d) {
        double v = radical_inverse(index + 1, bases[d]) + shift.s[d];
        xi[d] = v - std::floor(v);
    }
    return xi;
}

/// Maps the unit cube to the chart, u_d = tan(pi (xi_d - 1/2)), returning the
/// per-sample jacobian. Points too close to the excluded pole are clipped.
bool cube_to_chart(const std::array<double, 4>& xi, std::array<double, 4>& u, double& jac) {
    constexpr double eps = 1e-9;
    jac = 1.0;
    for (int d = 0; d < 4; ++d) {
        double x = xi[d];
        if (x < eps || x > 1.0 - eps) return false;
        double t = std::tan(kPi * (x - 0.5));
        u[d] = t;
        jac *= kPi * (1.0 + t * t);
    }
    return true;
}

template <typename PerSample>
void run_chunks(long samples, int threads, PerSample per_sample,
                std::vector<SampleStats>& chunk_stats) {
    const int n_chunks = static_cast<int>(chunk_stats.size());
    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    std::atomic<int> next_chunk{0};
    auto worker = [&]() {
        while (true) {
            int c = next_chunk.fetch_add(1);
            if (c >= n_chunks) return;
            long begin = samples * c / n_chunks;
            long end = samples * (c + 1) / n_chunks;
            for (long i = begin; i < end; ++i) per_sample(i, chunk_stats[c]);
        }
    };
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

double chern_integrand(const std::array<double, 4>& u, double h, double* c1_residual) {
    double a, c1;
    integrand_at(u, h, a, c1);
    if (c1_residual) *c1_residual = c1;
    return a;
}

ChernResult chern_numbers(long samples, double fd_step, uint64_t seed, int threads) {
    ChernResult res;
    res.samples = samples;
    res.fd_step = fd_step;
    res.seed = seed;

    QmcShift shift(seed);
    std::vector<SampleStats> chunks(64);
    run_chunks(samples, threads,
               [&](long i, SampleStats& st) {
                   std::array<double, 4> u;
                   double jac;
                   if (!cube_to_chart(qmc_point(static_cast<uint64_t>(i), shift), u, jac)) return;
                   double a, c1;
                   integrand_at(u, fd_step, a, c1);
                   st.add(a * jac);
                   st.c1_max = std::max(st.c1_max, c1);
               },
               chunks);

    double total = 0, c1 = 0;
    for (const auto& st : chunks) {
        total += st.sum;
        c1 = std::max(c1, st.c1_max);
    }
    const double integral = total / static_cast<double>(samples);
    res.c2_value = -integral / (8.0 * kPi * kPi);
    res.c1_max_residual = c1;
    return res;
}

double chern_oracle_quadrature(long samples, uint64_t seed, int threads) {
    QmcShift shift(seed);
    std::vector<SampleStats> chunks(64);
    run_chunks(samples, threads,
               [&](long i, SampleStats& st) {
                   std::array<double, 4> u;
                   double jac;
                   if (!cube_to_chart(qmc_point(static_cast<uint64_t>(i), shift), u, jac)) return;
                   const double r2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
                   const double denom = 1.0 + r2;
                   const double a = 48.0 / (denom * denom * denom * denom);
                   st.add(a * jac);
               },
               chunks);
    double total = 0;
    for (const auto& st : chunks) total += st.sum;
    return -(total / static_cast<double>(samples)) / (8.0 * kPi * kPi);
}

namespace {

/// Evaluates a normalized S7 polynomial at q = 1 with x_i = zeta_i.
Cplx eval_q1(const NCPoly& e, const std::array<Cplx, 4>& zeta) {
    Cplx acc{0, 0};
    for (const auto& [w, c] : e.terms()) {
        Cplx prod(c.eval(1.0), 0.0);
        for (unsigned char g : w) {
            GenId id = static_cast<GenId>(g);
            prod *= gen_barred(id) ? std::conj(zeta[gen_star(id) - X1]) : zeta[id - X1];
        }
        acc += prod;
    }
    return acc;
}

S7Point random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    S7Point z;
    double n = 0;
    do {
        for (auto& c : z.z) c = Cplx(gauss(rng), gauss(rng));
        n = std::sqrt(norm2(z));
    } while (n < 1e-6);
    for (auto& c : z.z) c /= n;
    return z;
}

double gauge_residual(const Projection& p, const S7Point& z, const std::array<Cplx, 4>& zeta) {
    Mat4c pc = classical_projection(hopf_map(z));
    const double d[4] = {1, -1, 1, 1};
    double worst = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Cplx quantum = eval_q1(p.p[i][j], zeta);
            Cplx conjugated = d[i] * pc[i][j] * d[j];
            worst = std::max(worst, std::abs(quantum - conjugated));
        }
    return worst;
}

}  // namespace

GaugeCheckResult q1_gauge_check(const RewriteSystem& s7, const Projection& p, uint64_t seed) {
    (void)s7;
    GaugeCheckResult out;
    std::mt19937_64 rng(seed);
    std::vector<S7Point> probes;
    for (int i = 0; i < 3; ++i) probes.push_back(random_unit(rng));

    int perm[4] = {0, 1, 2, 3};
    std::array<int, 4> best_perm{};
    std::array<int, 4> best_sign{};
    std::array<int, 4> best_conj{};
    std::sort(perm, perm + 4);
    do {
        for (int signs = 0; signs < 16; ++signs)
            for (int conjs = 0; conjs < 16; ++conjs) {
                bool ok = true;
                for (const auto& z : probes) {
                    std::array<Cplx, 4> zeta;
                    for (int i = 0; i < 4; ++i) {
                        Cplx v = z.z[perm[i]];
                        if (conjs >> i & 1) v = std::conj(v);
                        if (signs >> i & 1) v = -v;
                        zeta[i] = v;
                    }
                    if (gauge_residual(p, z, zeta) > 1e-9) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    out.found = true;
                    for (int i = 0; i < 4; ++i) {
                        best_perm[i] = perm[i];
                        best_sign[i] = signs >> i & 1;
                        best_conj[i] = conjs >> i & 1;
                    }
                    goto found;
                }
            }
    } while (std::next_permutation(perm, perm + 4));
found:
    if (!out.found) return out;

    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        if (i) os << ", ";
        os << "x" << i + 1 << " <- " << (best_sign[i] ? "-" : "") << (best_conj[i] ? "conj(z" : "z")
           << best_perm[i] + 1 << (best_conj[i] ? ")" : "");
    }
    out.renaming = os.str();

    // Certify at 20 fresh points, and check t|q=1 = (1 + x)/2 under the renaming.
    out.t_affine_in_x = true;
    NCPoly t_entry = p.p[1][1];
    for (int trial = 0; trial < 20; ++trial) {
        S7Point z = random_unit(rng);
        std::array<Cplx, 4> zeta;
        for (int i = 0; i < 4; ++i) {
            Cplx v = z.z[best_perm[i]];
            if (best_conj[i]) v = std::conj(v);
            if (best_sign[i]) v = -v;
            zeta[i] = v;
        }
        out.max_residual = std::max(out.max_residual, gauge_residual(p, z, zeta));

        S7Point zr;
        zr.z = zeta;
        double x = hopf_map(zr).x;
        Cplx tval = eval_q1(t_entry, zeta);
        if (std::abs(tval - Cplx(0.5 * (1.0 + x), 0)) > 1e-12) out.t_affine_in_x = false;
    }
    if (out.max_residual > 1e-12) out.found = false;
    return out;
}

void classical_checks(long samples, double fd_step, uint64_t seed, const RewriteSystem& s7,
                      const Projection& p, CheckSink sink) {
    auto emit = [&](const std::string& id, const std::string& desc, bool ok,
                    const std::string& detail = std::string()) {
        CheckResult r;
        r.id = id;
        r.description = desc;
        r.ok = ok;
        r.residual = ok ? std::string() : detail;
        sink(std::move(r));
    };

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

    // Hopf map: range constraint and SU(2) invariance.
    double worst_unit = 0, worst_inv = 0;
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        S7Point z = random_unit(rng);
        S4Point s = hopf_map(z);
        worst_unit = std::max(worst_unit, std::abs(std::norm(s.alpha) + std::norm(s.beta) +
                                                   s.x * s.x - 1.0));
        Cplx w1(uni(rng), uni(rng)), w2(uni(rng), uni(rng));
        double n = std::sqrt(std::norm(w1) + std::norm(w2));
        w1 /= n;
        w2 /= n;
        S4Point s2 = hopf_map(su2_act(z, w1, w2));
        worst_inv = std::max({worst_inv, std::abs(s.x - s2.x), std::abs(s.alpha - s2.alpha),
                              std::abs(s.beta - s2.beta)});
    }
    emit("classical.hopf.range", "hopf image satisfies the S4 constraint", worst_unit < 1e-12,
         std::to_string(worst_unit));
    emit("classical.hopf.su2", "hopf map is SU(2)-invariant", worst_inv < 1e-12,
         std::to_string(worst_inv));

    // Projector properties and consistency with the frame.
    double worst_proj = 0, worst_frame = 0;
    for (int i = 0; i < 10; ++i) {
        S7Point z = random_unit(rng);
        S4Point s = hopf_map(z);
        Mat4c pc = classical_projection(s);
        Mat4c sq = mat_mul(pc, pc);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                worst_proj = std::max(worst_proj, std::abs(sq[a][b] - pc[a][b]));
                worst_proj = std::max(worst_proj, std::abs(pc[a][b] - std::conj(pc[b][a])));
            }
        worst_proj = std::max(worst_proj, std::abs(mat_trace(pc) - Cplx(2, 0)));
        Mat4c pf = frame_projection(z);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                worst_frame = std::max(worst_frame, std::abs(pf[a][b] - pc[a][b]));
    }
    emit("classical.proj.props", "classical p is a rank-2 self-adjoint projector",
         worst_proj < 1e-12, std::to_string(worst_proj));
    emit("classical.proj.frame", "vv* from the quaternionic frame matches the closed form",
         worst_frame < 1e-12, std::to_string(worst_frame));

    GaugeCheckResult g = q1_gauge_check(s7, p, seed);
    emit("classical.gauge.found",
         "q = 1 projection is diag(1,-1,1,1)-conjugate to the classical one (" + g.renaming + ")",
         g.found, std::to_string(g.max_residual));
    emit("classical.gauge.t_affine", "t at q = 1 is affine in the x coordinate", g.t_affine_in_x);

    ChernResult c = chern_numbers(samples, fd_step, seed);
    emit("classical.chern.c2", "second Chern number is -1 within 0.05",
         std::abs(c.c2_value + 1.0) < 0.05, std::to_string(c.c2_value));
    emit("classical.chern.c1", "first Chern form residual below 1e-6",
         c.c1_max_residual < 1e-6, std::to_string(c.c1_max_residual));

    double oracle = chern_oracle_quadrature(std::max(200000L, samples / 10), seed);
    emit("classical.chern.oracle", "closed-form integrand quadrature reproduces -1",
         std::abs(oracle + 1.0) < 0.05, std::to_string(oracle));
}

}  // namespace qhopf
