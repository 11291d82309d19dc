#include "sl2/qarith.hpp"
#include "sl2/serialize.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace sl2;
using sl2::test::P;

namespace {

// Balanced Gaussian binomial from subsets: v^{-k(n-k)} * sum over k-subsets of v^{2 inv}.
LaurentPoly binom_by_subsets(long n, long k)
{
    if (k < 0 || k > n)
        return {};
    LaurentPoly r;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k)
            continue;
        long inv = 0, ones_seen = 0;
        for (long bit = 0; bit < n; ++bit) {
            if (mask & (1u << bit))
                ++ones_seen;
            else
                inv += ones_seen;
        }
        r += LaurentPoly::monomial(2 * inv - k * (n - k));
    }
    return r;
}

Rational ordinary_binom(long n, long k)
{
    Rational r(1);
    for (long i = 1; i <= k; ++i)
        r = r * Rational(n - k + i) / Rational(i);
    return r;
}

}  // namespace

TEST_CASE("Rational stays in lowest terms")
{
    Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.to_string() == "-3/2");
    CHECK(Rational::parse("5/2") == Rational(5, 2));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("4/6").to_string() == "2/3");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("lp_add")
{
    const LaurentPoly v = LaurentPoly::v();
    const LaurentPoly vinv = LaurentPoly::monomial(-1);
    CHECK(lp_add(v + LaurentPoly(1), LaurentPoly(-1)) == v);
    CHECK(lp_add(v + vinv, LaurentPoly()) == v + vinv);
    CHECK(lp_add(v + vinv, v - vinv) == P({{1, 2}}));
    CHECK((v - v).terms().empty());
}

TEST_CASE("lp_mul")
{
    const LaurentPoly v = LaurentPoly::v();
    const LaurentPoly vinv = LaurentPoly::monomial(-1);
    CHECK(lp_mul(v - vinv, v + vinv) == P({{2, 1}, {-2, -1}}));
    CHECK(lp_mul(v + vinv, LaurentPoly(1)) == v + vinv);
    CHECK(lp_mul(v + vinv, v + vinv) == P({{2, 1}, {0, 2}, {-2, 1}}));
}

TEST_CASE("q_int")
{
    CHECK(q_int(2) == P({{1, 1}, {-1, 1}}));
    CHECK(q_int(0).is_zero());
    CHECK(q_int(3) == P({{2, 1}, {0, 1}, {-2, 1}}));
    CHECK(q_int(1) == LaurentPoly(1));
    CHECK(q_int(-3) == -q_int(3));
}

TEST_CASE("q_fact")
{
    CHECK(q_fact(0) == LaurentPoly(1));
    CHECK(q_fact(2) == P({{1, 1}, {-1, 1}}));
    CHECK(q_fact(3) == P({{3, 1}, {1, 2}, {-1, 2}, {-3, 1}}));
    CHECK_THROWS_AS(q_fact(-1), DomainError);

    // Evaluation oracle at v = 2: [k] = (2^k - 2^-k) / (2 - 1/2).
    const Rational two(2);
    for (long n = 0; n <= 10; ++n) {
        Rational expected(1);
        for (long k = 1; k <= n; ++k) {
            Rational pk(1);
            for (long i = 0; i < k; ++i)
                pk *= two;
            expected *= (pk - Rational(1) / pk) / (two - Rational(1, 2));
        }
        CHECK(test::evaluate(q_fact(n), two) == expected);
    }
}

TEST_CASE("q_binom")
{
    CHECK(q_binom(4, 0) == LaurentPoly(1));
    CHECK(q_binom(2, 1) == P({{1, 1}, {-1, 1}}));
    CHECK(q_binom(4, 2) == P({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}));
    CHECK(q_binom(3, -1).is_zero());
    CHECK(q_binom(3, 4).is_zero());
    for (long n = 0; n <= 10; ++n)
        for (long k = -1; k <= n + 1; ++k)
            CHECK(q_binom(n, k) == binom_by_subsets(n, k));
}

TEST_CASE("specialize_one")
{
    CHECK(specialize_one(q_int(5)) == Rational(5));
    CHECK(specialize_one(q_fact(3)) == Rational(6));
    CHECK(specialize_one(LaurentPoly()) == Rational(0));
}

TEST_CASE("lp_div_exact")
{
    const LaurentPoly v = LaurentPoly::v();
    const LaurentPoly vinv = LaurentPoly::monomial(-1);
    CHECK(lp_div_exact(P({{2, 1}, {-2, -1}}), v - vinv) == v + vinv);
    CHECK(lp_div_exact(q_fact(4), LaurentPoly(1)) == q_fact(4));
    CHECK_THROWS_AS(lp_div_exact(v + LaurentPoly(1), v - LaurentPoly(1)), NotDivisibleError);
    CHECK_THROWS_AS(lp_div_exact(v, LaurentPoly()), DomainError);
    CHECK(lp_div_exact(LaurentPoly(), v).is_zero());
    CHECK(lp_div_exact(LaurentPoly::monomial(3, Rational(6)), LaurentPoly::monomial(-2, Rational(4)))
          == LaurentPoly::monomial(5, Rational(3, 2)));
}

TEST_CASE("lp_gcd up to units")
{
    const LaurentPoly a = q_int(4);  // [2] * (v^2 + v^-2)
    const LaurentPoly b = q_int(6);  // divisible by [2] and [3]
    LaurentPoly g = lp_gcd(a, b);
    CHECK(g == P({{2, 1}, {0, 1}}));  // [2] shifted to lowest exponent 0, monic
    CHECK(lp_gcd(LaurentPoly(), LaurentPoly()).is_zero());
    CHECK(lp_gcd(LaurentPoly::monomial(-4, Rational(3)), q_int(3)) == LaurentPoly(1));
}

TEST_CASE("q-integer identities for n <= 12")
{
    const LaurentPoly v = LaurentPoly::v();
    const LaurentPoly vinv = LaurentPoly::monomial(-1);
    Rational fact(1);
    for (long n = 0; n <= 12; ++n) {
        if (n >= 1) {
            CHECK(lp_mul(q_int(n), v - vinv) == LaurentPoly::monomial(n) - LaurentPoly::monomial(-n));
            fact *= Rational(n);
        }
        CHECK(q_int(-n) == -q_int(n));
        CHECK(specialize_one(q_fact(n)) == fact);
        CHECK(q_int(n).bar() == q_int(n));
        CHECK(q_fact(n).bar() == q_fact(n));
        for (long k = 0; k <= n; ++k) {
            CHECK(q_binom(n, k).bar() == q_binom(n, k));
            CHECK(specialize_one(q_binom(n, k)) == ordinary_binom(n, k));
            if (k >= 1 && k <= n - 1)
                CHECK(q_binom(n, k)
                      == LaurentPoly::monomial(k) * q_binom(n - 1, k)
                             + LaurentPoly::monomial(k - n) * q_binom(n - 1, k - 1));
        }
    }
}

TEST_CASE("ring laws on random sparse Laurent polynomials")
{
    std::mt19937 rng(20261019);
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly a = test::random_poly(rng), b = test::random_poly(rng), c = test::random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly());
        const LaurentPoly mixed = a * b + c;
        for (const auto& [e, coeff] : mixed.terms())
            CHECK(!coeff.is_zero());
        if (!b.is_zero())
            CHECK(lp_div_exact(a * b, b) == a);
    }
}

TEST_CASE("Laurent serialization round trip")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly a = test::random_poly(rng);
        CHECK(laurent_from_json(to_json(a)) == a);
    }
    CHECK(to_json(q_fact(3)).dump() == "[[-3,1,1],[-1,2,1],[1,2,1],[3,1,1]]");
    CHECK(q_fact(3).to_string() == "v^3+2*v+2*v^-1+v^-3");
}
