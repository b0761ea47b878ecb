#include "qhopf/spheres.hpp"

#include <sstream>

namespace qhopf {

namespace {

NCPoly gp(GenId g, int qpow = 0, long num = 1, long den = 1) {
    return NCPoly::gen(g, LaurentPoly::monomial(rat(num, den), qpow));
}

void emit(CheckSink& sink, const std::string& id, const std::string& desc, const NCPoly& residual) {
    CheckResult r;
    r.id = id;
    r.description = desc;
    r.ok = residual.is_zero();
    if (!r.ok) r.residual = residual.to_string();
    sink(std::move(r));
}

}  // namespace

RewriteSystem make_s7_system() {
    RewriteSystem rs("s7", {XB4, XB3, XB2, XB1, X1, X2, X3, X4});
    for (auto family : {RelationFamily::XX, RelationFamily::VV, RelationFamily::XV,
                        RelationFamily::SPHERE}) {
        RelationSet set = derive_relations(2, family);
        for (const auto& rule : set.rules) rs.add_rule(rule.lhs, rule.rhs);
    }
    return rs;
}

RewriteSystem make_s4_system() {
    // Weights make the sphere-relation reductions a a_bar -> {t, t^2, bbar b}
    // strictly decreasing; plain length grading cannot orient them.
    RewriteSystem rs("s4", {GT, GABAR, GA, GBBAR, GB}, {1, 2, 2, 1, 1});
    const LaurentPoly q2 = lp_q(2), qm2 = lp_q(-2), q4 = lp_q(4), qm4 = lp_q(-4);

    // Move t to the front.
    rs.add_rule(word_of({GABAR, GT}), NCPoly::term(word_of({GT, GABAR}), qm2));
    rs.add_rule(word_of({GA, GT}), NCPoly::term(word_of({GT, GA}), q2));
    rs.add_rule(word_of({GBBAR, GT}), NCPoly::term(word_of({GT, GBBAR}), q4));
    rs.add_rule(word_of({GB, GT}), NCPoly::term(word_of({GT, GB}), qm4));
    // Swap rules.
    rs.add_rule(word_of({GB, GA}), NCPoly::term(word_of({GA, GB}), qm4));
    rs.add_rule(word_of({GB, GABAR}), NCPoly::term(word_of({GABAR, GB}), LaurentPoly::one()));
    rs.add_rule(word_of({GBBAR, GA}), NCPoly::term(word_of({GA, GBBAR}), LaurentPoly::one()));
    rs.add_rule(word_of({GBBAR, GABAR}), NCPoly::term(word_of({GABAR, GBBAR}), q4));
    // Sphere reductions: a abar, abar a and b bbar in terms of t and bbar b.
    {
        NCPoly rhs = NCPoly::term(word_of({GT}), qm2) -
                     NCPoly::term(word_of({GT, GT}), LaurentPoly::one()) -
                     NCPoly::term(word_of({GBBAR, GB}), qm4);
        rs.add_rule(word_of({GA, GABAR}), rhs);
    }
    {
        NCPoly rhs = NCPoly::term(word_of({GT}), qm4) - NCPoly::term(word_of({GT, GT}), qm4) -
                     NCPoly::term(word_of({GBBAR, GB}), lp_q(-8));
        rs.add_rule(word_of({GABAR, GA}), rhs);
    }
    {
        NCPoly rhs = NCPoly::term(word_of({GBBAR, GB}), qm4) +
                     NCPoly::term(word_of({GT, GT}), LaurentPoly::one() - qm4);
        rs.add_rule(word_of({GB, GBBAR}), rhs);
    }
    return rs;
}

VMatrix build_v(const RewriteSystem& s7) {
    VMatrix v;
    v.m[0][0] = gp(X1, -3);
    v.m[1][0] = gp(XB2, -1, -1);
    v.m[2][0] = gp(X3, -1);
    v.m[3][0] = gp(XB4, 0, -1);
    v.m[0][1] = gp(X2, -2);
    v.m[1][1] = gp(XB1, -1);
    v.m[2][1] = gp(X4, 0, -1);
    v.m[3][1] = gp(XB3, 0, -1);

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            NCPoly ip;
            for (int k = 0; k < 4; ++k) ip += nc_star(v.m[k][i]) * v.m[k][j];
            NCPoly want = i == j ? NCPoly::one() : NCPoly::zero();
            if (s7.normalize(ip) != want) {
                std::ostringstream os;
                os << "frame inner product <phi_" << i + 1 << "|phi_" << j + 1
                   << "> != " << (i == j ? 1 : 0);
                throw std::logic_error(os.str());
            }
        }
    return v;
}

VMatrix build_naive_v() {
    VMatrix v;
    v.m[0][0] = gp(XB4);
    v.m[1][0] = gp(XB3, -1);
    v.m[2][0] = gp(XB2, -3, -1);
    v.m[3][0] = gp(XB1, -4, -1);
    v.m[0][1] = gp(X1);
    v.m[1][1] = gp(X2);
    v.m[2][1] = gp(X3);
    v.m[3][1] = gp(X4);
    return v;
}

Projection build_projection(const RewriteSystem& s7, const VMatrix& v) {
    Projection p;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            NCPoly e;
            for (int k = 0; k < 2; ++k) e += v.m[i][k] * nc_star(v.m[j][k]);
            p.p[i][j] = s7.normalize(e);
        }

    // Closed form: entries are spanned by {1, t, a, abar, b, bbar}.
    S4Generators g = extract_s4_generators(p);
    const NCPoly one = NCPoly::one();
    NCPoly want[4][4];
    want[0][0] = LaurentPoly::q_power(-2) * g.t;
    want[1][1] = g.t;
    want[2][2] = one - LaurentPoly::q_power(-4) * g.t;
    want[3][3] = one - LaurentPoly::q_power(2) * g.t;
    want[0][2] = g.a;
    want[0][3] = g.b;
    want[1][2] = LaurentPoly::q_power(-2) * g.bbar;
    want[1][3] = LaurentPoly::monomial(Rational(-1), 2) * g.abar;
    want[2][0] = g.abar;
    want[2][1] = LaurentPoly::q_power(-2) * g.b;
    want[3][0] = g.bbar;
    want[3][1] = LaurentPoly::monomial(Rational(-1), 2) * g.a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (p.p[i][j] != s7.normalize(want[i][j])) {
                std::ostringstream os;
                os << "projection entry p" << i + 1 << j + 1 << " differs from closed form";
                throw std::logic_error(os.str());
            }
    return p;
}

S4Generators extract_s4_generators(const Projection& p) {
    S4Generators g;
    g.t = p.p[1][1];
    g.a = p.p[0][2];
    g.b = p.p[0][3];
    g.abar = p.p[2][0];
    g.bbar = p.p[3][0];
    return g;
}

Projection projection_star(const Projection& p) {
    Projection s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s.p[i][j] = nc_star(p.p[j][i]);
    return s;
}

void check_projection_identities(const RewriteSystem& s7, const Projection& p, CheckSink sink) {
    Projection ps = projection_star(p);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            NCPoly sq;
            for (int k = 0; k < 4; ++k) sq += p.p[i][k] * p.p[k][j];
            NCPoly idem = s7.normalize(sq) - p.p[i][j];
            std::ostringstream id;
            id << "spheres.proj.idem." << i + 1 << j + 1;
            emit(sink, id.str(), "p^2 = p entry (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ")", idem);

            NCPoly sadj = s7.normalize(ps.p[i][j]) - p.p[i][j];
            std::ostringstream id2;
            id2 << "spheres.proj.selfadj." << i + 1 << j + 1;
            emit(sink, id2.str(), "p = p* entry (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")", sadj);
        }

    // Weighted trace: q^-2 p11 + q^2 p22 + p33 + p44 = 2.
    NCPoly tr = LaurentPoly::q_power(-2) * p.p[0][0] + LaurentPoly::q_power(2) * p.p[1][1] +
                p.p[2][2] + p.p[3][3] - NCPoly(LaurentPoly(Rational(2)));
    emit(sink, "spheres.proj.trace", "weighted trace q^-2 p11 + q^2 p22 + p33 + p44 = 2",
         s7.normalize(tr));

    // Quadratic sphere identity.
    auto prod = [&](const NCPoly& x, const NCPoly& y) { return s7.mul(x, y); };
    NCPoly quad = (lp_q(6) - lp_q(8)) * prod(p.p[0][0], p.p[0][0]) + prod(p.p[1][1], p.p[1][1]) +
                  prod(p.p[3][3], p.p[3][3]) +
                  lp_q(4) * (prod(p.p[0][2], p.p[2][0]) + prod(p.p[0][3], p.p[3][0])) +
                  lp_q(2) * (prod(p.p[1][3], p.p[3][1]) + prod(p.p[1][2], p.p[2][1])) -
                  NCPoly::one();
    emit(sink, "spheres.proj.quad", "quadratic sphere identity in the p entries",
         s7.normalize(quad));
}

std::vector<std::pair<std::string, NCPoly>> s4_defining_relations() {
    auto T = [](std::initializer_list<GenId> gs, int qpow = 0, long num = 1) {
        return NCPoly::term(word_of(gs), LaurentPoly::monomial(Rational(num), qpow));
    };
    std::vector<std::pair<std::string, NCPoly>> rels;
    rels.push_back({"ab=q4ba", T({GA, GB}) - T({GB, GA}, 4)});
    rels.push_back({"abar.b=b.abar", T({GABAR, GB}) - T({GB, GABAR})});
    rels.push_back({"ta=q-2at", T({GT, GA}) - T({GA, GT}, -2)});
    rels.push_back({"tb=q4bt", T({GT, GB}) - T({GB, GT}, 4)});
    // star conjugates
    rels.push_back({"bbar.abar=q4.abar.bbar", T({GBBAR, GABAR}) - T({GABAR, GBBAR}, 4)});
    rels.push_back({"bbar.a=a.bbar", T({GBBAR, GA}) - T({GA, GBBAR})});
    rels.push_back({"abar.t=q-2.t.abar", T({GABAR, GT}) - T({GT, GABAR}, -2)});
    rels.push_back({"bbar.t=q4.t.bbar", T({GBBAR, GT}) - T({GT, GBBAR}, 4)});
    // sphere relations
    rels.push_back({"a.abar+b.bbar", T({GA, GABAR}) + T({GB, GBBAR}) - T({GT}, -2) + T({GT, GT}, -4)});
    rels.push_back({"q4.abar.a+q-4.bbar.b", T({GABAR, GA}, 4) + T({GBBAR, GB}, -4) - T({GT}) + T({GT, GT})});
    rels.push_back(
        {"b.bbar-q-4.bbar.b", T({GB, GBBAR}) - T({GBBAR, GB}, -4) - T({GT, GT}) + T({GT, GT}, -4)});
    return rels;
}

void verify_s4_relations(const RewriteSystem& s7, const S4Generators& g, CheckSink sink) {
    std::map<GenId, NCPoly> embed = {
        {GT, g.t}, {GA, g.a}, {GABAR, g.abar}, {GB, g.b}, {GBBAR, g.bbar}};
    for (const auto& [name, rel] : s4_defining_relations()) {
        NCPoly embedded = nc_substitute(rel, embed);
        emit(sink, "spheres.s4rel." + name, "relation " + name + " inside A(S7_q)",
             s7.normalize(embedded));
    }
}

void naive_projection_checks(const RewriteSystem& s7, CheckSink sink) {
    VMatrix v = build_naive_v();
    // Frame orthonormality.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            NCPoly ip;
            for (int k = 0; k < 4; ++k) ip += nc_star(v.m[k][i]) * v.m[k][j];
            NCPoly want = i == j ? NCPoly::one() : NCPoly::zero();
            emit(sink, "spheres.naive.frame." + std::to_string(i + 1) + std::to_string(j + 1),
                 "naive frame orthonormality", s7.normalize(ip) - want);
        }

    Projection p;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            NCPoly e;
            for (int k = 0; k < 2; ++k) e += v.m[i][k] * nc_star(v.m[j][k]);
            p.p[i][j] = s7.normalize(e);
        }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            NCPoly sq;
            for (int k = 0; k < 4; ++k) sq += p.p[i][k] * p.p[k][j];
            emit(sink, "spheres.naive.idem." + std::to_string(i + 1) + std::to_string(j + 1),
                 "naive projection p^2 = p", s7.normalize(sq) - p.p[i][j]);
        }

    // Extra generators, vanishing at q = 1.
    NCPoly extra14 = p.p[0][3] - s7.normalize(NCPoly::term(
                                     word_of({X1, XB4}), LaurentPoly::one() - lp_q(-2)));
    emit(sink, "spheres.naive.extra14", "naive p14 = (1 - q^-2) x1 xb4", s7.normalize(extra14));
    NCPoly extra23 = p.p[1][2] - s7.normalize(NCPoly::term(
                                     word_of({X2, XB3}), LaurentPoly::one() - lp_q(-2)));
    emit(sink, "spheres.naive.extra23", "naive p23 = (1 - q^-2) x2 xb3", s7.normalize(extra23));

    CheckResult vanish;
    vanish.id = "spheres.naive.vanish_q1";
    vanish.description = "extra-generator coefficient (1 - q^-2) vanishes at q = 1";
    vanish.ok = (LaurentPoly::one() - lp_q(-2)).eval(Rational(1)) == 0;
    sink(std::move(vanish));
}

void plucker_check(const RewriteSystem& s7, const VMatrix& v, const S4Generators& g,
                   CheckSink sink) {
    auto minor = [&](int i, int j) {
        // quantum determinant of rows i,j: a11 a22 - q a12 a21
        NCPoly det = v.m[i][0] * v.m[j][1] - lp_q(1) * (v.m[i][1] * v.m[j][0]);
        return s7.normalize(det);
    };
    const NCPoly qm3t = LaurentPoly::q_power(-3) * g.t;
    struct Row {
        int i, j;
        NCPoly want;
        const char* label;
    };
    std::vector<Row> rows;
    rows.push_back({0, 1, g.t, "m12 = t"});
    rows.push_back({0, 2, g.b, "m13 = b"});
    rows.push_back({0, 3, LaurentPoly::monomial(Rational(-1), 1) * g.a, "m14 = -q a"});
    rows.push_back({1, 2, LaurentPoly::monomial(Rational(-1), 2) * g.abar, "m23 = -q^2 abar"});
    rows.push_back({1, 3, LaurentPoly::monomial(Rational(-1), -1) * g.bbar, "m24 = -q^-1 bbar"});
    rows.push_back({2, 3, qm3t - NCPoly(lp_q(1)), "m34 = q^-3 t - q"});
    for (const auto& r : rows) {
        std::ostringstream id;
        id << "spheres.plucker.m" << r.i + 1 << r.j + 1;
        emit(sink, id.str(), r.label, minor(r.i, r.j) - s7.normalize(r.want));
    }
}

void q_inverse_iso_check(const RewriteSystem& s4, CheckSink sink) {
    // q -> q^-1, a -> q^2 abar, b -> q^-2 bbar, t -> q^-2 t (star-equivariant).
    std::map<GenId, NCPoly> phi = {
        {GT, NCPoly::gen(GT, lp_q(-2))},     {GA, NCPoly::gen(GABAR, lp_q(2))},
        {GABAR, NCPoly::gen(GA, lp_q(2))},   {GB, NCPoly::gen(GBBAR, lp_q(-2))},
        {GBBAR, NCPoly::gen(GB, lp_q(-2))},
    };
    std::map<GenId, NCPoly> identity = {
        {GT, NCPoly::gen(GT)},     {GA, NCPoly::gen(GA)},   {GABAR, NCPoly::gen(GABAR)},
        {GB, NCPoly::gen(GB)},     {GBBAR, NCPoly::gen(GBBAR)},
    };
    auto invert_coeff = [](const LaurentPoly& c) { return c.invert_q(); };
    for (const auto& [name, rel] : s4_defining_relations()) {
        NCPoly image = nc_substitute(rel, phi, invert_coeff);
        emit(sink, "spheres.qinv." + name, "q -> q^-1 image of " + name + " lies in the ideal",
             s4.normalize(image));
        NCPoly same = nc_substitute(rel, identity);
        emit(sink, "spheres.qinv.identity." + name, "identity substitution fixes " + name,
             s4.normalize(same) - s4.normalize(rel));
    }
}

void s4_abstract_vs_embedded_check(const RewriteSystem& s7, const RewriteSystem& s4,
                                   const S4Generators& g, CheckSink sink) {
    std::map<GenId, NCPoly> embed = {
        {GT, g.t}, {GA, g.a}, {GABAR, g.abar}, {GB, g.b}, {GBBAR, g.bbar}};
    for (const auto& [lhs, rhs] : s4.rules_sorted()) {
        NCPoly diff = nc_substitute(NCPoly::term(lhs, LaurentPoly::one()) - rhs, embed);
        std::string label;
        for (unsigned char c : lhs) label += gen_name(static_cast<GenId>(c));
        emit(sink, "spheres.s4abs." + label,
             "abstract rule " + label + " holds under the embedding", s7.normalize(diff));
    }
}

}  // namespace qhopf
