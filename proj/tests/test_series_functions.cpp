#include <gtest/gtest.h>

#include "helpers.hpp"
#include "quartic/coefficient.hpp"
#include "quartic/series_functions.hpp"

using namespace quartic;
using namespace quartic::testing;

TEST(DivUnit, GeometricSeries)
{
    const ring r = zr();
    EXPECT_EQ(div_unit(poly(r, 5, {1}), poly(r, 5, {1, 1})), poly(r, 5, {1, -1, 1, -1, 1, -1}));
    EXPECT_EQ(inverse(poly(r, 5, {1, 1})), poly(r, 5, {1, -1, 1, -1, 1, -1}));
}

TEST(DivUnit, ExactQuotient)
{
    const ring r = zr();
    EXPECT_EQ(div_unit(poly(r, 6, {1, 0, -1}), poly(r, 6, {1, -1})), poly(r, 6, {1, 1}));
}

TEST(DivUnit, RejectsZeroConstant)
{
    const ring r({"x"});
    const series x = series::variable(r, "x", 4);
    EXPECT_THROW(div_unit(x, x), non_unit_divisor);
    EXPECT_THROW(inverse(series(r, 4)), non_unit_divisor);
}

TEST(DivUnit, WeightZeroPartMustBeConstant)
{
    const ring r({"z", "w"}, {1, 0});
    const series w = series::variable(r, "w", 3);
    const series one = series::constant(r, coefficient(1), 3);
    EXPECT_THROW(inverse(one + w), non_unit_divisor);
}

TEST(DivUnit, RoundTrip)
{
    std::mt19937 gen(3);
    const ring r = zwr();
    for (int trial = 0; trial < 20; ++trial) {
        const series a = random_series(gen, r, 8);
        series b = random_series(gen, r, 8, true) + coefficient(1 + trial % 3);
        EXPECT_EQ(div_unit(a * b, b), truncate(a, 8));
    }
}

TEST(DivMonomial, Exact)
{
    const ring r = zwr();
    const series s(r, 6, {{monomial{2, 3}, 1}, {monomial{1, 1}, 1}});
    const series expect(r, 5, {{monomial{2, 2}, 1}, {monomial{1, 0}, 1}});
    EXPECT_EQ(div_monomial(s, 1, 1), expect);
}

TEST(DivMonomial, ReportsOffendingMonomial)
{
    const ring r = zwr();
    const series s(r, 4, {{monomial{1, 0}, 1}, {monomial{0, 1}, 1}});
    try {
        div_monomial(s, 1, 1);
        FAIL() << "division should have failed";
    } catch (const inexact_division& e) {
        EXPECT_NE(std::string(e.what()).find("z^1"), std::string::npos) << e.what();
    }
}

TEST(DivMonomial, UndoesMultiplication)
{
    std::mt19937 gen(5);
    const ring r = zwr();
    const series a = random_series(gen, r, 6);
    EXPECT_EQ(div_monomial(mul_monomial(a, 0, 2), 0, 2), a);
}

TEST(Compose, Square)
{
    const ring u({"u"});
    const ring r = zr();
    const series f = poly(u, 6, {0, 0, 1});
    EXPECT_EQ(compose(f, {poly(r, 6, {0, 1, 1})}), poly(r, 6, {0, 0, 1, 2, 1}));
}

TEST(Compose, IdentityArgument)
{
    const ring r = zr();
    const series f = poly(r, 6, {0, 1, 2, 5, 14, 42, 132});
    EXPECT_EQ(compose(f, {series::variable(r, "z", 6)}), f);
}

TEST(Compose, RejectsConstantArgument)
{
    const ring r = zr();
    EXPECT_THROW(compose(poly(r, 3, {0, 1}), {poly(r, 3, {1, 1})}), non_nilpotent_argument);
}

TEST(Compose, Associative)
{
    std::mt19937 gen(9);
    const ring r = zwr();
    for (int trial = 0; trial < 5; ++trial) {
        const series f = random_series(gen, r, 6);
        const series g1 = random_series(gen, r, 6, true), g2 = random_series(gen, r, 6, true);
        const series h1 = random_series(gen, r, 6, true), h2 = random_series(gen, r, 6, true);
        const series lhs = compose(compose(f, {g1, g2}), {h1, h2});
        const series rhs = compose(f, {compose(g1, {h1, h2}), compose(g2, {h1, h2})});
        const int upto = std::min(lhs.bound(), rhs.bound());
        EXPECT_GE(upto, 6);
        EXPECT_EQ(truncate(lhs, upto), truncate(rhs, upto));
    }
}

TEST(Exp, Basics)
{
    const ring r = zr();
    EXPECT_EQ(exp_series(series(r, 5)), series::constant(r, coefficient(1), 5));
    const series e = exp_series(series::variable(r, "z", 6));
    for (unsigned n = 0; n <= 6; ++n)
        EXPECT_EQ(e.coeff({n}), coefficient(1) / coefficient(factorial(n)));
    EXPECT_THROW(exp_series(poly(r, 3, {1, 1})), non_nilpotent_argument);
}

TEST(Exp, SumBecomesProduct)
{
    std::mt19937 gen(13);
    const ring r = zwr();
    for (int trial = 0; trial < 5; ++trial) {
        const series a = random_series(gen, r, 7, true), b = random_series(gen, r, 7, true);
        EXPECT_EQ(exp_series(a + b), truncate(exp_series(a) * exp_series(b), 7));
    }
}

TEST(Calculus, IntegrateAndDifferentiate)
{
    const ring r({"x"});
    EXPECT_EQ(integrate(series::constant(r, coefficient(1), 4), 0), series::variable(r, "x", 5));
    EXPECT_EQ(differentiate(poly(r, 5, {0, 0, 0, 1}), 0), poly(r, 4, {0, 0, 3}));
    const series f = poly(r, 6, {3, 1, -2, 0, 5, 1, 7});
    EXPECT_EQ(integrate(differentiate(f, 0), 0), f - coefficient(3));
}

TEST(Calculus, DegreeSums)
{
    const series s(zwr(), 3, {{monomial{1, 0}, 2}, {monomial{0, 1}, 3}, {monomial{1, 1}, 4}});
    const auto sums = degree_sums(s, 3);
    ASSERT_EQ(sums.size(), 4u);
    EXPECT_EQ(sums[1], 5);
    EXPECT_EQ(sums[2], 4);
}
