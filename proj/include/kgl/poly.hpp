#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "kgl/rational.hpp"

namespace kgl {

// Dense polynomial in t over the rationals. Coefficients are stored low to
// high; the invariant is that the leading coefficient is nonzero (the zero
// polynomial has an empty coefficient vector).
struct Poly {
    std::vector<Rational> c;

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(const Rational& a) {
        Poly p;
        if (!rat_is_zero(a)) p.c = {a};
        return p;
    }
    static Poly one() { return constant(Rational(1)); }
    // t^k, k >= 0
    static Poly t_pow(int k) {
        assert(k >= 0);
        Poly p;
        p.c.assign(static_cast<std::size_t>(k) + 1, Rational(0));
        p.c.back() = 1;
        return p;
    }

    void trim() {
        while (!c.empty() && rat_is_zero(c.back())) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    // order of vanishing at t = 0; only meaningful for nonzero polynomials
    int order() const {
        assert(!is_zero());
        int k = 0;
        while (rat_is_zero(c[static_cast<std::size_t>(k)])) ++k;
        return k;
    }
    const Rational& leading() const {
        assert(!is_zero());
        return c.back();
    }
    Rational coeff(int k) const {
        if (k < 0 || k > degree()) return Rational(0);
        return c[static_cast<std::size_t>(k)];
    }
    Rational eval0() const { return coeff(0); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend Poly operator*(const Rational& s, const Poly& a) {
        Poly r = a;
        for (auto& x : r.c) x *= s;
        r.trim();
        return r;
    }

    // multiply by t^k
    Poly shifted(int k) const {
        assert(k >= 0);
        if (is_zero()) return Poly{};
        Poly r;
        r.c.assign(c.size() + static_cast<std::size_t>(k), Rational(0));
        std::copy(c.begin(), c.end(), r.c.begin() + k);
        return r;
    }

    // euclidean division, denominator nonzero
    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        assert(!b.is_zero());
        q = Poly{};
        r = a;
        if (a.degree() >= b.degree()) q.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            Rational f = r.leading() / b.leading();
            q.c[static_cast<std::size_t>(d)] = f;
            for (int i = 0; i <= b.degree(); ++i)
                r.c[static_cast<std::size_t>(i + d)] -= f * b.c[static_cast<std::size_t>(i)];
            r.trim();
        }
        q.trim();
    }

    Poly monic() const {
        assert(!is_zero());
        return (Rational(1) / leading()) * *this;
    }

    bool is_monomial() const { return !is_zero() && order() == degree(); }

    // monic gcd; gcd(0, 0) = 0. Computed with a primitive pseudo-remainder
    // sequence over the integers to keep coefficient growth polynomial.
    static Poly gcd(const Poly& a, const Poly& b) {
        if (a.is_zero()) return b.is_zero() ? b : b.monic();
        if (b.is_zero()) return a.monic();
        if (a.degree() == 0 || b.degree() == 0) return one();
        if (a.is_monomial() || b.is_monomial()) {
            int k = std::min(a.order(), b.order());
            if (a.is_monomial() && b.is_monomial()) return t_pow(k);
            const Poly& p = a.is_monomial() ? b : a;
            return t_pow(std::min(k, p.order()));
        }
        std::vector<mpz_class> za = to_primitive_z(a), zb = to_primitive_z(b);
        if (za.size() < zb.size()) std::swap(za, zb);
        while (!zb.empty()) {
            std::vector<mpz_class> r = pseudo_rem(za, zb);
            make_primitive(r);
            za = std::move(zb);
            zb = std::move(r);
        }
        std::vector<Rational> rc(za.size());
        for (std::size_t i = 0; i < za.size(); ++i) rc[i] = Rational(za[i]);
        return Poly(std::move(rc)).monic();
    }

  private:
    static std::vector<mpz_class> to_primitive_z(const Poly& p) {
        mpz_class den_lcm = 1;
        for (const auto& q : p.c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<mpz_class> z(p.c.size());
        for (std::size_t i = 0; i < p.c.size(); ++i) {
            Rational scaled = p.c[i] * Rational(den_lcm);
            z[i] = scaled.get_num();
        }
        mpz_class content = 0;
        for (const auto& x : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        if (content != 0 && content != 1)
            for (auto& x : z) x /= content;
        return z;
    }

    static void make_primitive(std::vector<mpz_class>& z) {
        while (!z.empty() && z.back() == 0) z.pop_back();
        mpz_class content = 0;
        for (const auto& x : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        if (content != 0 && content != 1)
            for (auto& x : z) x /= content;
    }

    // lc(b)^(deg a - deg b + 1) * a  mod  b, over the integers
    static std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> r, const std::vector<mpz_class>& b) {
        int db = static_cast<int>(b.size()) - 1;
        int d = static_cast<int>(r.size()) - 1 - db;
        const mpz_class& lb = b.back();
        for (int e = d; e >= 0; --e) {
            mpz_class coef = (db + e < static_cast<int>(r.size())) ? r[static_cast<std::size_t>(db + e)] : mpz_class(0);
            for (auto& x : r) x *= lb;
            if (coef != 0)
                for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(e + i)] -= coef * b[static_cast<std::size_t>(i)];
            if (static_cast<int>(r.size()) > db + e) r.resize(static_cast<std::size_t>(db + e));
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        return r;
    }
};

}  // namespace kgl
