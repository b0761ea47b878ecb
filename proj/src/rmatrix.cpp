#include "qhopf/rmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace qhopf {

SymplecticData::SymplecticData(int n_) : n(n_), N(2 * n_) {
    if (n_ < 1) throw std::invalid_argument("n must be positive");
}

RMatrix build_r(int n, LegConvention conv) {
    SymplecticData sd(n);
    const int N = sd.N;
    RMatrix r(N);
    const LaurentPoly q = lp_q(1);
    const LaurentPoly qinv = lp_q(-1);
    const LaurentPoly qdiff = q - qinv;

    auto put = [&](int i, int j, int k, int l, const LaurentPoly& c) {
        if (conv == LegConvention::RowFirst)
            r.add(i, j, k, l, c);
        else
            r.add(k, l, i, j, c);
    };

    // q sum e_i^i (x) e_i^i
    for (int i = 1; i <= N; ++i) put(i, i, i, i, q);
    // sum over i != j, i != j' of e_i^i (x) e_j^j
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i != j && i != sd.prime(j)) put(i, j, i, j, LaurentPoly::one());
    // q^-1 sum e_{i'}^{i'} (x) e_i^i
    for (int i = 1; i <= N; ++i) put(sd.prime(i), i, sd.prime(i), i, qinv);
    // (q - q^-1) sum_{i>j} e_i^j (x) e_j^i
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j) put(i, j, j, i, qdiff);
    // -(q - q^-1) sum_{i>j} q^{rho_i - rho_j} eps_i eps_j e_i^j (x) e_{i'}^{j'}
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j) {
            int sign = sd.eps(i) * sd.eps(j);
            LaurentPoly c = LaurentPoly::monomial(Rational(-sign), sd.rho(i) - sd.rho(j)) * qdiff;
            put(i, sd.prime(i), j, sd.prime(j), c);
        }
    return r;
}

size_t expected_r_support(int n) {
    const size_t N = 2 * static_cast<size_t>(n);
    // Five sums minus the n coincidences of the two lower-triangular families
    // (row (i,i'), col (i',i) for i > i'); overlapping coefficients never cancel.
    return 2 * N * N - N - n;
}

CMatrix build_c(int n) {
    SymplecticData sd(n);
    CMatrix c(sd.N);
    for (int i = 1; i <= sd.N; ++i) {
        int j = sd.prime(i);
        c.entries[i - 1][j - 1] = LaurentPoly::monomial(Rational(sd.eps(i)), sd.rho(j));
    }
    return c;
}

CMatrix build_c_inverse(int n) {
    SymplecticData sd(n);
    CMatrix c(sd.N);
    for (int j = 1; j <= sd.N; ++j) {
        int i = sd.prime(j);
        // (C^-1)_j^{j'} = q^{-rho_j} eps_{j'}
        c.entries[j - 1][i - 1] = LaurentPoly::monomial(Rational(sd.eps(i)), -sd.rho(j));
    }
    return c;
}

namespace {

using Sparse = std::map<std::pair<int, int>, LaurentPoly>;

void sparse_add(Sparse& m, int r, int c, const LaurentPoly& v) {
    auto it = m.find({r, c});
    if (it == m.end()) {
        if (!v.is_zero()) m[{r, c}] = v;
    } else {
        it->second += v;
        if (it->second.is_zero()) m.erase(it);
    }
}

Sparse sparse_mul(const Sparse& a, const Sparse& b) {
    std::map<int, std::vector<std::pair<int, const LaurentPoly*>>> b_by_row;
    for (const auto& [rc, v] : b) b_by_row[rc.first].push_back({rc.second, &v});
    Sparse out;
    for (const auto& [rc, v] : a) {
        auto it = b_by_row.find(rc.second);
        if (it == b_by_row.end()) continue;
        for (const auto& [col, bv] : it->second) sparse_add(out, rc.first, col, v * *bv);
    }
    return out;
}

}  // namespace

YbeReport check_ybe(const RMatrix& r) {
    const int N = r.dim();
    auto flat = [N](int i, int j, int k) { return ((i - 1) * N + (j - 1)) * N + (k - 1); };

    Sparse r12, r13, r23;
    for (const auto& [idx, v] : r.entries()) {
        auto [i, j, k, l] = idx;
        for (int m = 1; m <= N; ++m) {
            sparse_add(r12, flat(i, j, m), flat(k, l, m), v);
            sparse_add(r13, flat(i, m, j), flat(k, m, l), v);
            sparse_add(r23, flat(m, i, j), flat(m, k, l), v);
        }
    }

    Sparse lhs = sparse_mul(sparse_mul(r12, r13), r23);
    Sparse rhs = sparse_mul(sparse_mul(r23, r13), r12);
    for (const auto& [rc, v] : rhs) sparse_add(lhs, rc.first, rc.second, -v);

    YbeReport rep;
    for (const auto& [rc, v] : lhs) {
        rep.ok = false;
        int row = rc.first, col = rc.second;
        std::array<int, 6> comp = {row / (N * N) + 1, row / N % N + 1, row % N + 1,
                                   col / (N * N) + 1, col / N % N + 1, col % N + 1};
        rep.residuals.push_back({comp, v});
    }
    return rep;
}

const char* relation_family_name(RelationFamily f) {
    switch (f) {
        case RelationFamily::XX: return "xx";
        case RelationFamily::VV: return "vv";
        case RelationFamily::XV: return "xv";
        case RelationFamily::SPHERE: return "sphere";
    }
    return "?";
}

namespace {

GenId x_gen(int i) { return static_cast<GenId>(X1 + (i - 1)); }
GenId xb_gen(int i) { return static_cast<GenId>(XB1 - (i - 1)); }

// Substitutes rules into a quadratic identity until no leading word remains.
NCPoly reduce_by_rules(NCPoly e, const std::map<Word, NCPoly, GradedLex>& rules) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [w, c] : e.terms()) {
            auto it = rules.find(w);
            if (it == rules.end()) continue;
            NCPoly next = e;
            next.add_term(w, -c);
            next += c * it->second;
            e = std::move(next);
            changed = true;
            break;
        }
    }
    return e;
}

}  // namespace

RelationSet derive_relations(int n, RelationFamily family, LegConvention conv) {
    if (family == RelationFamily::SPHERE) return sphere_relation(n);
    return derive_relations_from(build_r(n, conv), n, family);
}

RelationSet derive_relations_from(const RMatrix& r, int n, RelationFamily family) {
    if (family == RelationFamily::SPHERE) return sphere_relation(n);
    if (n < 1 || n > 2)
        throw std::invalid_argument("derive_relations supports n = 1 and n = 2");
    SymplecticData sd(n);
    const int N = sd.N;
    const LaurentPoly q = lp_q(1);

    // One contracted identity per free index pair, tagged with its provenance.
    std::map<std::pair<int, int>, NCPoly> idents;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) idents[{i, j}] = NCPoly::zero();

    for (const auto& [idx, v] : r.entries()) {
        auto [i, j, k, l] = idx;
        switch (family) {
            case RelationFamily::XX:
                // R_ij^kp x_k x_p = q x_j x_i, free pair (i,j)
                idents[{i, j}] += NCPoly::term(word_of({x_gen(k), x_gen(l)}), v);
                break;
            case RelationFamily::VV:
                // v^l v^k R_lk^ji = q v^i v^j, free pair read off the columns
                idents[{k, l}] += NCPoly::term(word_of({xb_gen(i), xb_gen(j)}), v);
                break;
            case RelationFamily::XV:
                // v^j R_ij^kp x_k = q x_i v^p, free pair (i,p)
                idents[{i, l}] += NCPoly::term(word_of({xb_gen(j), x_gen(k)}), v);
                break;
            default: break;
        }
    }
    for (auto& [pair, e] : idents) {
        auto [u, w] = pair;
        switch (family) {
            case RelationFamily::XX:
                e -= NCPoly::term(word_of({x_gen(w), x_gen(u)}), q);
                break;
            case RelationFamily::VV:
                // column pair (j,i) corresponds to the identity for v^i v^j
                e -= NCPoly::term(word_of({xb_gen(w), xb_gen(u)}), q);
                break;
            case RelationFamily::XV:
                e -= NCPoly::term(word_of({x_gen(u), xb_gen(w)}), q);
                break;
            default: break;
        }
    }

    std::map<Word, NCPoly, GradedLex> rules;
    std::vector<std::pair<std::pair<int, int>, NCPoly>> pending;
    for (auto& [pair, e] : idents)
        if (!e.is_zero()) pending.push_back({pair, e});

    while (!pending.empty()) {
        bool progress = false;
        std::vector<std::pair<std::pair<int, int>, NCPoly>> next;
        for (auto& [pair, e] : pending) {
            NCPoly red = reduce_by_rules(e, rules);
            if (red.is_zero()) {
                progress = true;
                continue;
            }
            const auto& [lead, coeff] = *red.terms().rbegin();
            if (coeff.is_monomial()) {
                NCPoly rhs = -(red - NCPoly::term(lead, coeff));
                NCPoly scaled;
                for (const auto& [w, c] : rhs.terms())
                    scaled.add_term(w, c.divided_by_monomial(coeff));
                rules[lead] = std::move(scaled);
                progress = true;
            } else {
                next.push_back({pair, red});
            }
        }
        pending = std::move(next);
        if (!progress && !pending.empty()) {
            std::ostringstream os;
            os << "inconsistent relation system (" << relation_family_name(family)
               << "): no unit leading coefficient for index pair (" << pending[0].first.first
               << "," << pending[0].first.second << "), residual " << pending[0].second.to_string();
            throw std::logic_error(os.str());
        }
    }

    // The designated leading shape per family: an emitted rule outside it
    // means two identities forced inequivalent replacements somewhere.
    auto shape_ok = [&](const Word& lhs) {
        GenId g0 = static_cast<GenId>(static_cast<unsigned char>(lhs[0]));
        GenId g1 = static_cast<GenId>(static_cast<unsigned char>(lhs[1]));
        switch (family) {
            case RelationFamily::XX: return !gen_barred(g0) && !gen_barred(g1) && g0 > g1;
            case RelationFamily::VV: return gen_barred(g0) && gen_barred(g1) && g0 > g1;
            case RelationFamily::XV: return !gen_barred(g0) && gen_barred(g1);
            default: return false;
        }
    };
    const size_t expected =
        family == RelationFamily::XV ? static_cast<size_t>(N) * N
                                     : static_cast<size_t>(N) * (N - 1) / 2;

    // Canonicalize: replacements fully reduced against the final rule set.
    RelationSet out;
    out.family = family;
    for (auto& [lhs, rhs] : rules) {
        if (!shape_ok(lhs))
            throw std::logic_error(std::string("inconsistent relation system (") +
                                   relation_family_name(family) +
                                   "): rule emitted for a non-leading word " + lhs);
        out.rules.push_back({lhs, reduce_by_rules(rhs, rules)});
    }
    if (out.rules.size() != expected)
        throw std::logic_error(std::string("inconsistent relation system (") +
                               relation_family_name(family) + "): expected " +
                               std::to_string(expected) + " rules, got " +
                               std::to_string(out.rules.size()));
    std::sort(out.rules.begin(), out.rules.end(),
              [](const Relation& a, const Relation& b) { return GradedLex()(a.lhs, b.lhs); });
    return out;
}

RelationSet sphere_relation(int n) {
    SymplecticData sd(n);
    RelationSet out;
    out.family = RelationFamily::SPHERE;
    // Eliminate xb1 x1: it is the one diagonal word whose letters always sort
    // adjacent (end of the barred block, start of the unbarred block), so the
    // rule composes with the straightening rules without leaving residues.
    NCPoly rhs = NCPoly::one();
    for (int i = 2; i <= sd.N; ++i)
        rhs -= NCPoly::term(word_of({xb_gen(i), x_gen(i)}), LaurentPoly::one());
    out.rules.push_back({word_of({xb_gen(1), x_gen(1)}), rhs});
    return out;
}

}  // namespace qhopf
