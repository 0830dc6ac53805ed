#include "rpart/bernoulli.hpp"
#include "rpart/sampling.hpp"

#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

using namespace rpart;

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(7) == Rational(0));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    CHECK(bernoulli_number(30) == Rational(BigInt("8615841276005"), BigInt("14322")));
    for (long n = 3; n <= 61; n += 2) CHECK(bernoulli_number(n).is_zero());
    CHECK_THROWS_AS(bernoulli_number(-1), std::invalid_argument);
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_poly(0) == RatPoly::constant(1));
    CHECK(bernoulli_poly(1) == RatPoly{Rational(-1, 2), Rational(1)});
    CHECK(bernoulli_poly(2) == RatPoly{Rational(1, 6), Rational(-1), Rational(1)});
    CHECK(bernoulli_poly(3) == RatPoly{Rational(0), Rational(1, 2), Rational(-3, 2), Rational(1)});
    for (long n = 0; n <= 40; ++n) {
        const RatPoly b = bernoulli_poly(n);
        CHECK(b.degree() == n);
        CHECK(b.leading() == Rational(1));
        CHECK(b.coeff(0) == bernoulli_number(n));
    }
    CHECK_THROWS_AS(bernoulli_poly(-2), std::invalid_argument);
}

TEST_CASE("integral over a unit interval gives x^n") {
    std::mt19937_64 rng(2024);
    for (long n = 1; n <= 40; ++n) {
        const RatPoly b = bernoulli_poly(n);
        for (int s = 0; s < 20; ++s) {
            const Rational x = random_rational(rng);
            CHECK(poly_integrate(b, x, x + Rational(1)) == pow(x, n));
        }
    }
}

TEST_CASE("difference, reflection and endpoint identities") {
    const RatPoly one_minus_x{Rational(1), Rational(-1)};
    for (long n = 0; n <= 40; ++n) {
        const RatPoly b = bernoulli_poly(n);
        if (n >= 1) CHECK(forward_diff(b) == RatPoly::monomial(Rational(n), n - 1));
        CHECK(b.composed_affine(Rational(-1), Rational(1)) == (n % 2 == 0 ? b : -b));
        if (n >= 2) {
            CHECK(b(Rational(0)) == bernoulli_number(n));
            CHECK(b(Rational(1)) == bernoulli_number(n));
        }
    }
    CHECK(bernoulli_poly(1)(Rational(1)) == Rational(1, 2));
    CHECK(bernoulli_poly(2)(Rational(1, 2)) == Rational(-1, 12));
}

TEST_CASE("2-adic valuation") {
    CHECK(v2(Rational(8, 3)) == Valuation(3));
    CHECK(v2(Rational(-1, 30)) == Valuation(-1));
    CHECK(v2(Rational(3, 5)) == Valuation(0));
    CHECK_FALSE(v2(Rational(0)).is_finite());
    CHECK(v2(Rational(0)) == Valuation::neg_infinity());
    CHECK(v2(Rational(0)).to_string() == "-inf");
    CHECK(v2(BigInt(96)) == Valuation(5));
    CHECK(Valuation::neg_infinity() < Valuation(-1000));
    CHECK(Valuation(2) < Valuation(3));
    CHECK_THROWS(Valuation::neg_infinity().value());
    for (long n = 1; n <= 50; ++n) CHECK(v2(bernoulli_number(2 * n)) == Valuation(-1));
}

TEST_CASE("von Staudt-Clausen denominators") {
    CHECK(staudt_clausen_denominator(2) == 6);
    CHECK(staudt_clausen_denominator(4) == 30);
    CHECK(staudt_clausen_denominator(12) == 2730);
    for (long n = 1; n <= 25; ++n) CHECK(bernoulli_number(2 * n).den() == staudt_clausen_denominator(2 * n));
    CHECK_THROWS_AS(staudt_clausen_denominator(3), std::invalid_argument);
    CHECK_THROWS_AS(staudt_clausen_denominator(0), std::invalid_argument);
}

TEST_CASE("cache is consistent under concurrent extension") {
    // fresh indices beyond anything requested above
    std::vector<std::vector<Rational>> seen(4);
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < 4; ++t) {
            pool.emplace_back([t, &seen] {
                for (long n = 90 + t; n >= 60; n -= 3) seen[t].push_back(bernoulli_number(n));
            });
        }
    }
    for (int t = 0; t < 4; ++t) {
        long n = 90 + t;
        for (const Rational& b : seen[t]) {
            CHECK(b == bernoulli_number(n));
            n -= 3;
        }
    }
    CHECK(BernoulliCache::global().size() >= 94);
}
