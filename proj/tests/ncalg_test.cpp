#include <random>

#include "doctest.h"
#include "qhopf/spheres.hpp"

using namespace qhopf;

namespace {

const RewriteSystem& s7() {
    static RewriteSystem rs = make_s7_system();
    return rs;
}

NCPoly word(std::initializer_list<GenId> gs) {
    return NCPoly::term(word_of(gs), LaurentPoly::one());
}

}  // namespace

TEST_CASE("basic normal forms") {
    // x2 x1 -> q^-1 x1 x2
    CHECK(s7().normalize(word({X2, X1})) == NCPoly::term(word_of({X1, X2}), lp_q(-1)));
    // sphere rule
    NCPoly sphere = NCPoly::one() - word({XB4, X4}) - word({XB3, X3}) - word({XB2, X2});
    CHECK(s7().normalize(word({XB1, X1})) == sphere);
    // already normal
    CHECK(s7().normalize(word({XB1, X2})) == word({XB1, X2}));
}

TEST_CASE("sphere relation sums to one") {
    NCPoly sum;
    for (GenId g : {X1, X2, X3, X4}) sum += s7().mul(word({gen_star(g)}), word({g}));
    CHECK(sum == NCPoly::one());
}

TEST_CASE("unit element") {
    NCPoly e = word({X3, XB2, X1});
    CHECK(s7().mul(NCPoly::one(), e) == s7().normalize(e));
}

TEST_CASE("star involution and antimultiplicativity") {
    CHECK(nc_star(word({X1})) == word({XB1}));
    CHECK(nc_star(NCPoly::term(word_of({X2, X1}), lp_q(1))) ==
          NCPoly::term(word_of({XB1, XB2}), lp_q(1)));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> g(0, 7), len(0, 5);
    for (int i = 0; i < 300; ++i) {
        Word w;
        for (int k = len(rng); k > 0; --k) w.push_back(static_cast<char>(g(rng)));
        NCPoly e = NCPoly::term(w, LaurentPoly::monomial(rat(i % 5 + 1), i % 3));
        CHECK(nc_star(nc_star(e)) == e);
    }
}

TEST_CASE("star compatibility with the defining ideal") {
    for (const auto& [lhs, rhs] : s7().rules_sorted()) {
        NCPoly rel = NCPoly::term(lhs, LaurentPoly::one()) - rhs;
        CHECK(s7().reduces_to_zero(nc_star(rel)));
    }
}

TEST_CASE("associativity spot check of the x3 x2 x1 product") {
    NCPoly left = s7().mul(word({X3}), s7().mul(word({X2}), word({X1})));
    NCPoly right = s7().mul(s7().mul(word({X3}), word({X2})), word({X1}));
    CHECK(left == right);
}

TEST_CASE("randomized associativity over 1000 triples") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> g(0, 7), len(0, 4);
    auto rand_word = [&]() {
        Word w;
        for (int k = len(rng); k > 0; --k) w.push_back(static_cast<char>(g(rng)));
        return NCPoly::term(w, LaurentPoly::one());
    };
    for (int i = 0; i < 1000; ++i) {
        NCPoly u = rand_word(), v = rand_word(), w = rand_word();
        CHECK(s7().mul(u, s7().mul(v, w)) == s7().mul(s7().mul(u, v), w));
    }
}

TEST_CASE("iteration budget guard fires and names the input") {
    RewriteSystem rs = make_s7_system();
    rs.set_iteration_budget(2);
    NCPoly big = NCPoly::term(word_of({X4, X3, X2, X1, XB1, XB2}), LaurentPoly::one());
    CHECK_THROWS_AS(rs.normalize(big), NormalizationBudgetExceeded);
}

TEST_CASE("rules reject replacements that do not decrease") {
    RewriteSystem rs("bad", {X1, X2});
    CHECK_THROWS_AS(rs.add_rule(word_of({X1, X2}), NCPoly::term(word_of({X2, X1}), lp_q(1))),
                    std::logic_error);
    // alphabet violations are rejected too
    CHECK_THROWS_AS(rs.add_rule(word_of({X3, X1}), NCPoly::zero()), std::invalid_argument);
}

TEST_CASE("q = 1 degeneration turns rules into commutativity") {
    const Word sphere_lhs = word_of({XB1, X1});
    for (const auto& [lhs, rhs] : s7().rules_sorted()) {
        if (lhs == sphere_lhs) continue;
        Word swapped;
        swapped.push_back(lhs[1]);
        swapped.push_back(lhs[0]);
        for (const auto& [w, c] : rhs.terms()) {
            Rational v = c.eval(Rational(1));
            if (w == swapped)
                CHECK(v == 1);
            else
                CHECK(v == 0);
        }
    }
}

TEST_CASE("abstract s4 system sanity") {
    RewriteSystem s4 = make_s4_system();
    CHECK(s4.rule_count() == 11);
    // a abar and abar a both reduce, b bbar reduces, bbar b is normal
    CHECK(s4.normalize(NCPoly::term(word_of({GBBAR, GB}), LaurentPoly::one())) ==
          NCPoly::term(word_of({GBBAR, GB}), LaurentPoly::one()));
    for (const auto& [name, rel] : s4_defining_relations()) {
        INFO(name);
        CHECK(s4.reduces_to_zero(rel));
    }
}
