#pragma once

#include <map>
#include <string>

#include "qhopf/rational.hpp"

namespace qhopf {

/// Element of Q[q, q^-1]: finite map exponent -> nonzero rational coefficient.
/// The map is kept canonical (no zero entries, ascending exponents), so
/// operator== on the underlying map is structural equality in the ring.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    explicit LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    /// c * q^k
    static LaurentPoly monomial(const Rational& c, int k) {
        LaurentPoly p;
        if (c != 0) p.terms_[k] = c;
        return p;
    }
    static LaurentPoly q_power(int k) { return monomial(Rational(1), k); }
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    /// True iff the polynomial is a single term c*q^k (a unit of the ring).
    bool is_monomial() const { return terms_.size() == 1; }

    const std::map<int, Rational>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Division by a unit c*q^k. Throws if the divisor is not a monomial.
    LaurentPoly divided_by_monomial(const LaurentPoly& m) const {
        if (!m.is_monomial()) throw std::domain_error("division only by monomials c*q^k");
        const auto [k, c] = *m.terms_.begin();
        LaurentPoly r;
        for (const auto& [ka, ca] : terms_) r.terms_[ka - k] = ca / c;
        return r;
    }

    /// q -> q^-1 (exponent negation); a ring automorphism.
    LaurentPoly invert_q() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_[-k] = c;
        return r;
    }

    /// Exact evaluation at rational q0 != 0.
    Rational eval(const Rational& q0) const {
        if (q0 == 0) throw std::domain_error("q0 = 0: negative exponents undefined");
        Rational acc(0);
        for (const auto& [k, c] : terms_) acc += c * rat_pow(q0, k);
        return acc;
    }

    /// Floating evaluation at q0 != 0.
    double eval(double q0) const;

    /// Canonical text form, exponents ascending: e.g. "q^-4 - q^-2 - 1 + q^2".
    std::string to_string() const;

    /// Exact inverse of to_string (also accepts any sum of c*q^k terms).
    static LaurentPoly parse(const std::string& s);

private:
    void add_term(int k, const Rational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (c != 0) terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<int, Rational> terms_;
};

inline LaurentPoly lp_q(int k = 1) { return LaurentPoly::q_power(k); }
inline LaurentPoly lp_const(long c) { return LaurentPoly(c); }

}  // namespace qhopf
