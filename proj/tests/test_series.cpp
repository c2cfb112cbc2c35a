#include <gtest/gtest.h>

#include "helpers.hpp"
#include "quartic/series_functions.hpp"

using namespace quartic;
using namespace quartic::testing;

TEST(Series, AdditionCancels)
{
    const ring r = zr();
    EXPECT_EQ(poly(r, 4, {1, 1}) + poly(r, 4, {-1, 1}), poly(r, 4, {0, 2}));
    EXPECT_EQ(poly(r, 4, {0, 1}) + series(r, 4), poly(r, 4, {0, 1}));
    EXPECT_EQ(poly(r, 4, {0, 1, 2}) + poly(r, 4, {0, 0, 1}), poly(r, 4, {0, 1, 3}));
}

TEST(Series, SumTakesSmallerBound)
{
    const ring r = zr();
    const series s = poly(r, 2, {0, 1, 1}) + poly(r, 5, {0, 0, 0, 7});
    EXPECT_EQ(s.bound(), 2);
    EXPECT_EQ(s, poly(r, 2, {0, 1, 1}));
}

TEST(Series, Multiplication)
{
    const ring r = zr();
    EXPECT_EQ(poly(r, 4, {1, 1}) * poly(r, 4, {1, -1}), poly(r, 4, {1, 0, -1}));
    EXPECT_EQ(poly(r, 1, {1, 1}) * poly(r, 1, {1, -1}), poly(r, 1, {1}));
    const series c = poly(r, 4, {0, 1, 2, 5});
    const series sq = c * c;
    EXPECT_EQ(sq.coeff({2}), 1);
    EXPECT_EQ(sq.coeff({3}), 4);
    EXPECT_EQ(sq.coeff({4}), 14);
}

TEST(Series, ProductBoundUsesValuation)
{
    const ring r = zr();
    // z^2 known to degree 4 times 1 + z known to degree 3: the first factor
    // limits the product to degree 4, the second alone would allow 5.
    const series p = poly(r, 4, {0, 0, 1}) * poly(r, 3, {1, 1});
    EXPECT_EQ(p.bound(), 4);
    EXPECT_EQ(p, poly(r, 4, {0, 0, 1, 1}));
    EXPECT_EQ((poly(r, 6, {0, 0, 1}) * poly(r, 3, {1, 1})).bound(), 5);
}

TEST(Series, WeightedDegree)
{
    const ring r({"z", "w"}, {1, 0});
    const series w = series::variable(r, "w", 2);
    const series z = series::variable(r, "z", 2);
    EXPECT_EQ(w.valuation(), 0);
    const series p = z * z * pow(w, 5);
    EXPECT_EQ(p.coeff({2, 5}), 1);
    EXPECT_EQ((z * z * z).bound(), 4);
    EXPECT_EQ((w * w).bound(), 2);
}

TEST(Series, IncompatibleRings)
{
    EXPECT_THROW(poly(zr(), 3, {1}) + poly(ring({"x"}), 3, {1}), incompatible_rings);
    EXPECT_THROW(poly(zr(), 3, {1}) * poly(ring({"x"}), 3, {1}), incompatible_rings);
    EXPECT_NO_THROW(poly(zr(), 3, {1}) + poly(ring({"z"}), 3, {1}));
}

TEST(Series, ToString)
{
    EXPECT_EQ(poly(zr(), 3, {1, 0, -2}).to_string(), "1 + -2 * z^2 + O(deg > 3)");
    EXPECT_EQ(series(zr(), 1).to_string(), "0 + O(deg > 1)");
}

TEST(SeriesLaws, RingLawsOnRandomSeries)
{
    std::mt19937 gen(7);
    const ring r = zwr();
    for (int trial = 0; trial < 30; ++trial) {
        const series a = random_series(gen, r, 8), b = random_series(gen, r, 8), c = random_series(gen, r, 8);
        EXPECT_EQ(truncate((a * b) * c, 8), truncate(a * (b * c), 8));
        EXPECT_EQ(truncate(a * (b + c), 8), truncate(a * b + a * c, 8));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
    }
}

TEST(SeriesLaws, TruncationCommutesWithProduct)
{
    std::mt19937 gen(11);
    const ring r = zwr();
    for (int trial = 0; trial < 10; ++trial) {
        const series a = random_series(gen, r, 8), b = random_series(gen, r, 8);
        for (int k = 0; k <= 8; ++k)
            EXPECT_EQ(truncate(a * b, k), truncate(truncate(a, k) * truncate(b, k), k));
    }
}
