#include "oracles.hpp"
#include "specnum/polynomial.hpp"
#include "specnum/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace specnum;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    return Rational(num(rng), den(rng));
}

UniPoly random_unipoly(std::mt19937& rng, Var v) {
    std::uniform_int_distribution<int> deg(-1, 5);
    std::vector<Rational> c;
    for (int k = 0, d = deg(rng); k <= d; ++k) c.push_back(random_rational(rng));
    return UniPoly(v, c);
}

BiPoly random_bipoly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 4);
    std::vector<std::vector<Rational>> m(deg(rng));
    for (auto& row : m)
        for (int j = 0, d = deg(rng); j < d; ++j) row.push_back(random_rational(rng));
    return BiPoly(m);
}

}  // namespace

TEST_CASE("Rational is kept in reduced form", "[rational]") {
    const Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational().str() == "0/1");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational::parse("10/-4") == Rational(-5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("binomial", "[combinatorics]") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(oracle::pascal(30, 15) == 155117520);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(4, 5) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    for (unsigned n = 0; n <= 20; ++n)
        for (unsigned k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == oracle::pascal(n, k));
}

TEST_CASE("multinomial", "[combinatorics]") {
    CHECK(multinomial(2, {0, 2}) == 1);
    CHECK(multinomial(2, {1, 1}) == 2);
    CHECK(multinomial(6, {2, 2, 2}) == factorial(6) / (factorial(2) * factorial(2) * factorial(2)));
    CHECK(multinomial(6, {2, 2, 2}) == 90);
    CHECK_THROWS_AS(multinomial(3, {1, 1}), std::invalid_argument);
    for (long n = 0; n <= 20; ++n)
        for (long k = 0; k <= n; ++k) REQUIRE(multinomial(n, {k, n - k}) == binomial(n, k));
}

TEST_CASE("falling_factorial", "[polynomial]") {
    CHECK(falling_factorial(BiPoly::x(), 0) == BiPoly(Rational(1)));

    // x(x - lambda)(x - 2 lambda) = x^3 - 3 lambda x^2 + 2 lambda^2 x
    const BiPoly expected({{}, {0, 0, 2}, {0, -3}, {1}});
    CHECK(falling_factorial(BiPoly::x(), 3) == expected);

    CHECK(falling_factorial(Rational(3), 1, Rational(2)) == BiPoly(Rational(3)));

    for (unsigned n = 0; n <= 20; ++n) {
        const UniPoly at_zero = falling_factorial(BiPoly::x(), n).substitute(Var::lambda, Rational(0));
        REQUIRE(at_zero == UniPoly::monomial(Var::x, 1, n));
    }
    for (unsigned n = 0; n <= 8; ++n) {
        const Rational s(3, 2);
        const UniPoly numeric = falling_factorial(BiPoly::x(), n).substitute(Var::lambda, s);
        REQUIRE(numeric == oracle::numeric_falling(n, s));
    }
}

TEST_CASE("substitute", "[polynomial]") {
    // x^2 - lambda^2/6 - 1/12
    const BiPoly p({{Rational(-1, 12), 0, Rational(-1, 6)}, {}, {1}});
    CHECK(substitute(p, Var::lambda, Rational(0)) == UniPoly(Var::x, {Rational(-1, 12), 0, 1}));

    CHECK(substitute(UniPoly::indeterminate(Var::x), Var::x, Rational(5)) == Rational(5));
    CHECK_THROWS_AS(substitute(UniPoly::indeterminate(Var::x), Var::lambda, Rational(5)), std::invalid_argument);
    CHECK_THROWS_AS(parse_var("y"), std::invalid_argument);

    const BiPoly ff = falling_factorial(BiPoly::x(), 3);
    CHECK(substitute(ff, Var::lambda, Rational(1)) == UniPoly(Var::x, {0, 2, -3, 1}));

    // Substituting x := m gives a polynomial in lambda; x := x + 1 shifts.
    CHECK(substitute(ff, Var::x, Rational(2)) == UniPoly(Var::lambda, {8, -12, 4}));
    const BiPoly shifted = substitute(BiPoly::x(), Var::x, UniPoly(Var::x, {1, 1}));
    CHECK(shifted == BiPoly(UniPoly(Var::x, {1, 1})));
}

TEST_CASE("BiPoly canonical form trims zero rows and columns", "[polynomial]") {
    const BiPoly a({{1, 0, 0}, {0, 0}, {}});
    CHECK(a.rows() == 1);
    CHECK(a.cols() == 1);
    CHECK((BiPoly::x() - BiPoly::x()).is_zero());
    CHECK((BiPoly::x() * BiPoly::lambda()).coeff(1, 1) == 1);
    CHECK(UniPoly(Var::x, {0, 0}).is_zero());
}

TEST_CASE("ring axioms on random values", "[polynomial][property]") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);

        const UniPoly p = random_unipoly(rng, Var::x), q = random_unipoly(rng, Var::x),
                      r = random_unipoly(rng, Var::x);
        REQUIRE((p * q) * r == p * (q * r));
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE(p * q == q * p);
        REQUIRE((p * q).eval(a) == p.eval(a) * q.eval(a));

        const BiPoly u = random_bipoly(rng), v = random_bipoly(rng), w = random_bipoly(rng);
        REQUIRE((u * v) * w == u * (v * w));
        REQUIRE(u * (v + w) == u * v + u * w);
        REQUIRE(u * v == v * u);
        REQUIRE(u - u == BiPoly());
        REQUIRE((u * v).substitute(Var::x, a) == u.substitute(Var::x, a) * v.substitute(Var::x, a));
    }
}

TEST_CASE("UniPoly mixing indeterminates", "[polynomial]") {
    CHECK_THROWS_AS(UniPoly::indeterminate(Var::x) + UniPoly::indeterminate(Var::lambda), std::invalid_argument);
    CHECK(UniPoly::constant(Var::x, 3) == UniPoly::constant(Var::lambda, 3));
    CHECK(UniPoly::indeterminate(Var::x) != UniPoly::indeterminate(Var::lambda));
    CHECK((UniPoly::constant(Var::x, 2) * UniPoly::indeterminate(Var::lambda)).var() == Var::lambda);
}
