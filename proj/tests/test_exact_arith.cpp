#include <catch2/catch_amalgamated.hpp>

#include "kgl/parse.hpp"
#include "kgl/ratfun.hpp"
#include "kgl/rng.hpp"

using namespace kgl;

TEST_CASE("tval examples") {
    CHECK(tval(parse_ratfun("t^2/(1+t)")) == Valuation::of(2));
    CHECK(tval(parse_ratfun("0")) == Valuation::infinity());
    CHECK(tval(parse_ratfun("(3*t - t^3)/(2+t)")) == Valuation::of(1));
}

TEST_CASE("residue examples") {
    CHECK(residue(parse_ratfun("(1+t)/(1-t)")) == Rational(1));
    CHECK(residue(parse_ratfun("t^2")) == Rational(0));
    CHECK(residue(parse_ratfun("(2+t)/(4-t)")) == Rational(1, 2));
    CHECK_THROWS_AS(residue(parse_ratfun("t^-1")), NegativeValuation);
}

TEST_CASE("parse examples") {
    CHECK(parse_ratfun("t^-1") == RatFun::one() / RatFun::t());
    RatFun f = parse_ratfun("(3*t^2 - 1/2)/(1 + t)");
    CHECK(f.den.leading() == 1);  // monic denominator
    CHECK(f.den == Poly(std::vector<Rational>{Rational(1), Rational(1)}));
    CHECK(parse_ratfun("0").is_zero());
    CHECK(parse_ratfun(" ( t + 1 ) * ( t - 1 ) ") == parse_ratfun("t^2 - 1"));
    CHECK(parse_ratfun("1/2 * t") == parse_ratfun("t/2"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_ratfun("t^^2"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfun("(1+t"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfun("1+"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfun("t 2"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfun("1/(t - t)"), DivisionByZero);
    try {
        parse_ratfun("t^^2");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.pos == 2);
    }
}

TEST_CASE("field axioms on random triples") {
    Rng rng(17);
    for (int it = 0; it < 200; ++it) {
        RatFun a = rng.ratfun(), b = rng.ratfun(), c = rng.ratfun();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inv() == RatFun::one());
    }
}

TEST_CASE("tval is a discrete valuation") {
    Rng rng(18);
    for (int it = 0; it < 200; ++it) {
        RatFun a = rng.ratfun(), b = rng.ratfun();
        CHECK(tval(a * b) == tval(a) + tval(b));
        Valuation lo = std::min(tval(a), tval(b));
        CHECK(tval(a + b) >= lo);
        if (tval(a) != tval(b)) CHECK(tval(a + b) == lo);
    }
}

TEST_CASE("parse of print is the identity on 1000 random values") {
    Rng rng(19);
    for (int it = 0; it < 1000; ++it) {
        RatFun f = rng.ratfun();
        CHECK(parse_ratfun(to_string(f)) == f);
    }
}

TEST_CASE("taylor prefix agrees with series multiplication") {
    Rng rng(20);
    for (int it = 0; it < 50; ++it) {
        RatFun f = rng.ratfun();
        if (!f.in_A()) f = f * RatFun::t_pow(-f.tval().v + (f.is_zero() ? 0 : 0));
        if (!f.in_A()) continue;
        int k = 1 + static_cast<int>(rng.uniform(0, 5));
        Poly pre = taylor_prefix(f, k);
        RatFun diff = f - RatFun(pre, Poly::one());
        if (!diff.is_zero()) CHECK(diff.tval().v >= k);
    }
}
