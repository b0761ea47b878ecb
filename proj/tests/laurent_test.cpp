#include <random>

#include "doctest.h"
#include "qhopf/laurent.hpp"

using namespace qhopf;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-5, 5), num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        p += LaurentPoly::monomial(rat(num(rng), den(rng)), expo(rng));
    return p;
}

}  // namespace

TEST_CASE("difference of squares") {
    LaurentPoly a = LaurentPoly::one() - lp_q(2);
    LaurentPoly b = LaurentPoly::one() + lp_q(2);
    CHECK(a * b == LaurentPoly::one() - lp_q(4));
}

TEST_CASE("additive inverse cancels to the empty term map") {
    LaurentPoly a = lp_q(1) - lp_q(-1);
    LaurentPoly b = lp_q(-1) - lp_q(1);
    CHECK((a + b).is_zero());
    CHECK((a + b).terms().empty());
}

TEST_CASE("expansion of q^-4 (1 - q^2)(1 - q^4)") {
    LaurentPoly lhs = LaurentPoly::monomial(rat(1), -4) * (LaurentPoly::one() - lp_q(2));
    LaurentPoly rhs = LaurentPoly::one() - lp_q(4);
    LaurentPoly expect = lp_q(-4) - lp_q(-2) - LaurentPoly::one() + lp_q(2);
    CHECK(lhs * rhs == expect);
}

TEST_CASE("evaluation") {
    // The degree-zero Chern character coefficient vanishes at q = 1.
    LaurentPoly chp = LaurentPoly(Rational(2)) -
                      lp_q(-4) * (LaurentPoly::one() - lp_q(2)) *
                          (LaurentPoly::one() - lp_q(4));
    CHECK(chp.eval(Rational(1)) == 2);
    CHECK(lp_q(4).eval(rat(1, 2)) == rat(1, 16));
    CHECK((LaurentPoly::one() - lp_q(2)).eval(Rational(1)) == 0);
    CHECK_THROWS_AS(lp_q(-1).eval(Rational(0)), std::domain_error);
}

TEST_CASE("q inversion") {
    CHECK(lp_q(2).invert_q() == lp_q(-2));
    CHECK((LaurentPoly::one() - lp_q(-4)).invert_q() == LaurentPoly::one() - lp_q(4));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = random_poly(rng);
        CHECK(p.invert_q().invert_q() == p);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("evaluation is multiplicative") {
    std::mt19937_64 rng(7);
    Rational q0 = rat(3, 5);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK(a.eval(q0) * b.eval(q0) == (a * b).eval(q0));
        CHECK(a.invert_q() * b.invert_q() == (a * b).invert_q());
    }
}

TEST_CASE("rendering and exact round trip") {
    LaurentPoly p = lp_q(-4) - lp_q(-2) - LaurentPoly::one() + lp_q(2);
    CHECK(p.to_string() == "q^-4 - q^-2 - 1 + q^2");
    CHECK(LaurentPoly::parse(p.to_string()) == p);
    CHECK(LaurentPoly::zero().to_string() == "0");
    CHECK(LaurentPoly::parse("3/2*q^-3 + 1").to_string() == "3/2*q^-3 + 1");

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p2 = random_poly(rng);
        if (p2.is_zero()) continue;
        CHECK(LaurentPoly::parse(p2.to_string()) == p2);
    }
}
