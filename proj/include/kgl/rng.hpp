#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "kgl/matrix.hpp"

namespace kgl {

// Deterministic pseudorandom generator (splitmix64) with the instance
// distributions used by the self tests: rational-function entries p(t)/q(t)
// with degrees <= 3 and coefficient numerators in [-9, 9], which keeps entry
// valuations within [-3, 3].
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long bound = 9) { return Rational(uniform(-bound, bound)); }

    Poly poly(int max_deg = 3, long bound = 9) {
        std::vector<Rational> c(static_cast<std::size_t>(uniform(0, max_deg)) + 1);
        for (auto& x : c) x = rational(bound);
        return Poly(std::move(c));
    }

    Poly nonzero_poly(int max_deg = 3, long bound = 9) {
        for (;;) {
            Poly p = poly(max_deg, bound);
            if (!p.is_zero()) return p;
        }
    }

    RatFun ratfun(int max_deg = 3, long bound = 9) { return RatFun(poly(max_deg, bound), nonzero_poly(max_deg, bound)); }

    // element of the valuation ring A
    RatFun ratfun_in_A(int max_deg = 3, long bound = 9) {
        for (;;) {
            RatFun f = ratfun(max_deg, bound);
            if (f.in_A()) return f;
        }
    }

    RatFun unit_in_A(int max_deg = 3, long bound = 9) {
        for (;;) {
            RatFun f = ratfun_in_A(max_deg, bound);
            if (f.is_unit()) return f;
        }
    }

    MatK matk(int n, int max_deg = 3, long bound = 9) {
        MatK m(n, n);
        for (auto& x : m.a) x = ratfun(max_deg, bound);
        return m;
    }

    MatK invertible_matk(int n, int max_deg = 3, long bound = 9) {
        for (;;) {
            MatK m = matk(n, max_deg, bound);
            if (!det(m).is_zero()) return m;
        }
    }

    // random element of GL_n(A): unit lower * diag(units) * unit upper
    MatK gl_a(int n, int max_deg = 2, long bound = 4) {
        MatK lo = MatK::identity(n), up = MatK::identity(n), d(n, n);
        for (int i = 0; i < n; ++i) {
            d.at(i, i) = unit_in_A(max_deg, bound);
            for (int j = 0; j < i; ++j) lo.at(i, j) = ratfun_in_A(max_deg, bound);
            for (int j = i + 1; j < n; ++j) up.at(i, j) = ratfun_in_A(max_deg, bound);
        }
        return lo * d * up;
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 1);
        for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform(0, i))]);
        return p;
    }

    Rational nonzero_rational(long bound = 9) {
        for (;;) {
            Rational q = rational(bound);
            if (!rat_is_zero(q)) return q;
        }
    }

    QMat qmat(int rows, int cols, long bound = 9) {
        QMat m(rows, cols);
        for (auto& x : m.a) x = rational(bound);
        return m;
    }

    QMat invertible_qmat(int n, long bound = 9) {
        for (;;) {
            QMat m = qmat(n, n, bound);
            if (!rat_is_zero(det(m))) return m;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace kgl
