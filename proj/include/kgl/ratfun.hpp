#pragma once

#include <cassert>
#include <limits>
#include <string>

#include "kgl/errors.hpp"
#include "kgl/poly.hpp"

namespace kgl {

// t-adic valuation value: an integer or +infinity (for the zero element).
struct Valuation {
    bool infinite = false;
    long v = 0;

    static Valuation infinity() { return Valuation{true, 0}; }
    static Valuation of(long k) { return Valuation{false, k}; }

    bool is_finite() const { return !infinite; }
    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.v < b.v;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a == b || a < b; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite || b.infinite) return infinity();
        return of(a.v + b.v);
    }
    std::string to_string() const { return infinite ? "inf" : std::to_string(v); }
};

// Exact rational function in one variable t over the rationals, kept in
// canonical form: denominator nonzero and monic, gcd(num, den) = 1.
// Structural equality therefore coincides with mathematical equality.
// The valuation ring A consists of the elements with tval >= 0; these are
// exactly the rational functions regular at t = 0.
struct RatFun {
    Poly num;
    Poly den;  // monic, nonzero

    RatFun() : num(), den(Poly::one()) {}
    RatFun(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) { canonicalize(); }
    /*implicit*/ RatFun(const Rational& a) : num(Poly::constant(a)), den(Poly::one()) {}
    /*implicit*/ RatFun(long a) : num(Poly::constant(Rational(a))), den(Poly::one()) {}

    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(Rational(1)); }
    static RatFun t() { return RatFun(Poly::t_pow(1), Poly::one()); }
    static RatFun t_pow(long k) {
        if (k >= 0) return RatFun(Poly::t_pow(static_cast<int>(k)), Poly::one());
        return RatFun(Poly::one(), Poly::t_pow(static_cast<int>(-k)));
    }

    void canonicalize() {
        if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num.is_zero()) {
            den = Poly::one();
            return;
        }
        Poly g = Poly::gcd(num, den);
        if (g.degree() > 0) {
            Poly q, r;
            Poly::divrem(num, g, q, r);
            assert(r.is_zero());
            num = q;
            Poly::divrem(den, g, q, r);
            assert(r.is_zero());
            den = q;
        }
        Rational lc = den.leading();
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            num = inv * num;
            den = inv * den;
        }
    }

    bool is_zero() const { return num.is_zero(); }

    Valuation tval() const {
        if (is_zero()) return Valuation::infinity();
        return Valuation::of(num.order() - den.order());
    }
    bool in_A() const { return is_zero() || tval().v >= 0; }
    bool is_unit() const { return !is_zero() && tval().v == 0; }

    // value at t = 0; defined on A
    Rational residue() const {
        if (is_zero()) return Rational(0);
        Valuation v = tval();
        if (v.v < 0) throw NegativeValuation("residue of an element with tval < 0");
        if (v.v > 0) return Rational(0);
        // canonical form shares no factor t, so den(0) != 0 here
        return num.eval0() / den.eval0();
    }

    bool is_constant() const { return den.is_one() && num.degree() <= 0; }
    Rational as_rational() const {
        assert(is_constant());
        return num.eval0();
    }

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    RatFun operator-() const {
        RatFun r = *this;
        r.num = -r.num;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num * b.num, a.den * b.den); }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RatFun(a.num * b.den, a.den * b.num);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return RatFun(den, num);
    }
    RatFun pow(long k) const {
        if (k == 0) return one();
        RatFun base = k > 0 ? *this : inv();
        long e = k > 0 ? k : -k;
        RatFun r = one();
        for (long i = 0; i < e; ++i) r *= base;
        return r;
    }
};

inline Valuation tval(const RatFun& f) { return f.tval(); }
inline Rational residue(const RatFun& f) { return f.residue(); }

// First k Taylor coefficients at t = 0 of an element of A, as a polynomial of
// degree < k. Exact power-series division; requires tval(f) >= 0.
inline Poly taylor_prefix(const RatFun& f, int k) {
    if (f.is_zero() || k <= 0) return Poly::zero();
    if (f.tval().v < 0) throw NegativeValuation("taylor expansion of an element with tval < 0");
    const Poly& p = f.num;
    const Poly& q = f.den;
    Rational q0 = q.coeff(0);
    assert(!rat_is_zero(q0));  // canonical form: num carries any factor of t
    std::vector<Rational> s(static_cast<std::size_t>(k), Rational(0));
    for (int m = 0; m < k; ++m) {
        Rational acc = p.coeff(m);
        for (int i = 1; i <= m; ++i) acc -= q.coeff(i) * s[static_cast<std::size_t>(m - i)];
        s[static_cast<std::size_t>(m)] = acc / q0;
    }
    return Poly(std::move(s));
}

// Canonical representative of f modulo t^k * A: the finite Laurent tail of f
// at t = 0 with exponents below k. The quotient (f - laurent_prefix(f,k))/t^k
// lies in A.
inline RatFun laurent_prefix(const RatFun& f, long k) {
    if (f.is_zero()) return RatFun::zero();
    long v = f.tval().v;
    if (v >= k) return RatFun::zero();
    RatFun shifted = f * RatFun::t_pow(-v);
    Poly pre = taylor_prefix(shifted, static_cast<int>(k - v));
    return RatFun(pre, Poly::one()) * RatFun::t_pow(v);
}

// ---------------------------------------------------------------------------
// Printing. The printer emits a sum of monomials "c*t^k" with k descending and
// a parenthesized "/denominator" when the denominator is not 1; its output is
// re-readable by parse_ratfun.

inline std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (rat_is_zero(c)) continue;
        bool neg = sgn(c) < 0;
        Rational mag = neg ? Rational(-c) : c;
        std::string tpart = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        std::string piece;
        if (k == 0)
            piece = rat_to_string(mag);
        else if (mag == 1)
            piece = tpart;
        else
            piece = rat_to_string(mag) + "*" + tpart;
        if (first) {
            if (neg) {
                // "-t^k" is not in the input grammar; spell the coefficient out
                out += (mag == 1 && k > 0) ? "-1*" + tpart : "-" + piece;
            } else {
                out += piece;
            }
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

inline std::string to_string(const RatFun& f) {
    if (f.den.is_one()) return poly_to_string(f.num);
    return "(" + poly_to_string(f.num) + ")/(" + poly_to_string(f.den) + ")";
}

}  // namespace kgl
