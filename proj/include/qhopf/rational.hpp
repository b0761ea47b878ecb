#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qhopf {

/// Arbitrary-precision rational scalar. All symbolic coefficients live here;
/// no floating point enters the exact layer.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// q0^k for integer k (k may be negative; q0 must be nonzero).
inline Rational rat_pow(const Rational& base, long k) {
    if (base == 0 && k < 0) throw std::domain_error("negative power of zero");
    Rational acc(1);
    Rational b = k >= 0 ? base : Rational(1) / base;
    for (long i = 0, e = k >= 0 ? k : -k; i < e; ++i) acc *= b;
    return acc;
}

inline double rat_to_double(const Rational& r) { return r.get_d(); }

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

/// Parses "a" or "a/b" with optional sign.
inline Rational rat_parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

}  // namespace qhopf
