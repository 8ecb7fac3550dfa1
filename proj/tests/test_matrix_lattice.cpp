#include <catch2/catch_amalgamated.hpp>

#include "kgl/lattice.hpp"
#include "kgl/parse.hpp"
#include "kgl/rng.hpp"
#include "kgl/smith.hpp"

using namespace kgl;

namespace {

MatK parse_mat(const std::vector<std::vector<std::string>>& rows) {
    int n = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    MatK m(n, c);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = parse_ratfun(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
}

const MatK kTwoByTwo = parse_mat({{"1", "1"}, {"1", "1+t"}});

}  // namespace

TEST_CASE("minor examples") {
    CHECK(minor(kTwoByTwo, {1, 2}, {1, 2}) == RatFun::t());
    CHECK(minor(kTwoByTwo, {1}, {1}) == RatFun::one());
    CHECK(minor(MatK::identity(3), {1, 3}, {1, 2}).is_zero());
    CHECK_THROWS_AS(minor(kTwoByTwo, {1, 2}, {1}), SizeMismatch);
}

TEST_CASE("compound examples") {
    MatK d = MatK::diagonal({parse_ratfun("2"), parse_ratfun("t"), parse_ratfun("1+t")});
    MatK c2 = compound(d, 2);
    CHECK(c2 == MatK::diagonal({parse_ratfun("2*t"), parse_ratfun("2*(1+t)"), parse_ratfun("t*(1+t)")}));
    Rng rng(23);
    MatK m = rng.matk(3);
    MatK cn = compound(m, 3);
    CHECK(cn.rows == 1);
    CHECK(cn.at(0, 0) == det(m));
}

TEST_CASE("compound is multiplicative (Cauchy-Binet)") {
    Rng rng(24);
    for (int it = 0; it < 10; ++it) {
        MatK m = rng.matk(3), n = rng.matk(3);
        for (int r = 1; r <= 3; ++r) CHECK(compound(m * n, r) == compound(m, r) * compound(n, r));
    }
}

TEST_CASE("smith examples") {
    SmithData s1 = smith_dvr(MatK::identity(3));
    CHECK(s1.m == std::vector<long>{0, 0, 0});
    CHECK(s1.U == MatK::identity(3));
    CHECK(s1.V == MatK::identity(3));

    MatK d = MatK::diagonal({parse_ratfun("t^2"), parse_ratfun("t^-1")});
    SmithData s2 = smith_dvr(d);
    CHECK(s2.m == std::vector<long>{-1, 2});

    SmithData s3 = smith_dvr(kTwoByTwo);
    CHECK(s3.m == std::vector<long>{0, 1});

    MatK z(2, 2);
    CHECK_THROWS_AS(smith_dvr(z), Singular);
}

TEST_CASE("smith output satisfies its invariants") {
    Rng rng(25);
    for (int it = 0; it < 12; ++it) {
        int n = 2 + static_cast<int>(rng.uniform(0, 2));
        MatK phi = rng.invertible_matk(n);
        SmithData s = smith_dvr(phi);
        CHECK(is_unimodular(s.U));
        CHECK(is_unimodular(s.V));
        MatK diag = s.U * phi * s.V;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    CHECK(diag.at(i, j) == RatFun::t_pow(s.m[static_cast<std::size_t>(i)]));
                else
                    CHECK(diag.at(i, j).is_zero());
            }
        for (int i = 0; i + 1 < n; ++i) CHECK(s.m[static_cast<std::size_t>(i)] <= s.m[static_cast<std::size_t>(i) + 1]);
    }
}

TEST_CASE("smith minor-valuation oracle, exhaustive for n <= 4") {
    Rng rng(26);
    for (int it = 0; it < 8; ++it) {
        int n = 2 + static_cast<int>(rng.uniform(0, 2));
        MatK phi = rng.invertible_matk(n);
        SmithData s = smith_dvr(phi);
        for (int r = 1; r <= n; ++r) {
            Valuation best = Valuation::infinity();
            for (const auto& A : subsets_lex(n, r))
                for (const auto& B : subsets_lex(n, r)) best = std::min(best, tval(minor(phi, A, B)));
            long sum = 0;
            for (int i = 0; i < r; ++i) sum += s.m[static_cast<std::size_t>(i)];
            CHECK(best == Valuation::of(sum));
        }
    }
}

TEST_CASE("hnf examples") {
    MatK d = MatK::diagonal({parse_ratfun("t^2"), parse_ratfun("t^5")});
    CHECK(hnf_dvr(d) == d);

    MatK tl = MatK::diagonal({RatFun::t(), RatFun::t()});
    CHECK(hnf_dvr(tl) == tl);

    Rng rng(27);
    for (int it = 0; it < 10; ++it) {
        int n = 2 + static_cast<int>(rng.uniform(0, 2));
        MatK b = rng.invertible_matk(n);
        MatK g = rng.gl_a(n);
        CHECK(hnf_dvr(b) == hnf_dvr(b * g));
    }
}

TEST_CASE("hnf shape is canonical") {
    Rng rng(28);
    for (int it = 0; it < 10; ++it) {
        int n = 2 + static_cast<int>(rng.uniform(0, 2));
        MatK h = hnf_dvr(rng.invertible_matk(n));
        for (int i = 0; i < n; ++i) {
            long k = h.at(i, i).tval().v;
            CHECK(h.at(i, i) == RatFun::t_pow(k));
            for (int j = i + 1; j < n; ++j) CHECK(h.at(i, j).is_zero());
            for (int j = 0; j < i; ++j) {
                // entries left of a pivot are Laurent tails with exponents < k
                RatFun e = h.at(i, j);
                if (e.is_zero()) continue;
                CHECK(e.den.is_monomial());
                CHECK(e.num.degree() - e.den.degree() < k);
            }
        }
    }
}

TEST_CASE("hnf preserves the lattice") {
    Rng rng(2801);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng.uniform(0, 1));
        MatK b = rng.invertible_matk(n, 2, 4);
        MatK h = hnf_dvr(b);
        for (int j = 0; j < n; ++j) {
            for (const auto& c : solve_exact(b, h.col(j))) CHECK(c.in_A());
            for (const auto& c : solve_exact(h, b.col(j))) CHECK(c.in_A());
        }
    }
}

TEST_CASE("lattice examples") {
    Lattice std2 = Lattice::standard(2);
    Lattice t2 = Lattice::scaled_standard(2, 1);
    CHECK(lattice_sum(t2, t2) == t2);
    CHECK(lattice_intersect(std2, t2) == t2);
    CHECK(lattice_sum(std2, t2) == std2);

    MatK phi = MatK::diagonal({parse_ratfun("t^-1"), parse_ratfun("t^2")});
    Lattice pre = lattice_preimage(phi, std2);
    Lattice inter = lattice_intersect(pre, std2);
    CHECK(inter == Lattice(2, MatK::diagonal({RatFun::t(), RatFun::one()})));
}

TEST_CASE("preimage against the elementwise membership oracle") {
    Rng rng(29);
    for (int it = 0; it < 6; ++it) {
        int n = 2 + static_cast<int>(rng.uniform(0, 1));
        MatK phi = rng.invertible_matk(n);
        Lattice l(n, rng.invertible_matk(n));
        Lattice pre = lattice_preimage(phi, l);
        for (int j = 0; j < n; ++j) {
            CHECK(l.contains(phi * pre.basis.col(j)));
        }
        // oracle: x in preimage iff phi x in l
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<RatFun> v(static_cast<std::size_t>(n));
            for (auto& x : v) x = rng.ratfun(2, 3);
            CHECK(pre.contains(v) == l.contains(phi * v));
        }
    }
}

TEST_CASE("lattice modularity on chains") {
    Rng rng(30);
    for (int it = 0; it < 6; ++it) {
        int n = 2;
        Lattice l1(n, rng.invertible_matk(n));
        Lattice l3(n, rng.invertible_matk(n));
        Lattice l2 = lattice_sum(l1, l3);  // guarantees l1 subset l2
        Lattice lhs = lattice_sum(l1, lattice_intersect(l2, l3));
        Lattice rhs = lattice_intersect(l2, lattice_sum(l1, l3));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("field kernel and image and rank over the rationals") {
    CHECK(field_rank(QMat::identity(4)) == 4);
    QMat m(2, 2, {Rational(1), Rational(1), Rational(1), Rational(1)});
    QMat k = field_kernel(m);
    CHECK(k.cols == 1);
    CHECK(k.at(0, 0) * Rational(-1) == k.at(1, 0));
    Rng rng(31);
    for (int it = 0; it < 20; ++it) {
        QMat r = rng.qmat(3, 4);
        CHECK(field_rank(r) == 4 - field_kernel(r).cols);
        CHECK(field_rank(r) == field_image(r).cols);
    }
}
