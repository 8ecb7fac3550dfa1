#pragma once

#include <gmpxx.h>

#include <string>

#include "kgl/errors.hpp"

namespace kgl {

// Arbitrary-precision rational, canonical form maintained by GMP:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool rat_is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw SyntaxError("malformed rational '" + s + "'", 0);
    if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    q.canonicalize();
    return q;
}

}  // namespace kgl
