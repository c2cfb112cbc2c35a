#include <gtest/gtest.h>

#include "helpers.hpp"
#include "quartic/fixed_point.hpp"
#include "quartic/series_functions.hpp"

using namespace quartic;
using namespace quartic::testing;

namespace {

// Catalan numbers by their convolution recurrence.
std::vector<mpz_class> catalan(int n)
{
    std::vector<mpz_class> c{1};
    for (int k = 1; k <= n; ++k) {
        mpz_class s = 0;
        for (int i = 0; i < k; ++i)
            s += c[i] * c[k - 1 - i];
        c.push_back(s);
    }
    return c;
}

} // namespace

TEST(FixedPoint, CatalanSeries)
{
    const ring r = zr();
    const int bound = 15;
    const series z = series::variable(r, "z", bound);
    fixed_point_system sys{{"y"}, [&](const std::vector<series>& y) {
                               const series t = y[0] + coefficient(1);
                               return std::vector<series>{z * t * t};
                           },
                           r, bound};
    const auto y = solve(sys)[0];
    const auto c = catalan(bound + 1);
    EXPECT_EQ(y.bound(), bound);
    EXPECT_EQ(y.coeff({0}), 0);
    for (int n = 1; n <= bound; ++n)
        EXPECT_EQ(y.coeff({static_cast<unsigned>(n)}), c[n]) << n;
}

TEST(FixedPoint, ConstantRightHandSide)
{
    const ring r = zr();
    const series z = series::variable(r, "z", 6);
    fixed_point_system sys{{"y"}, [&](const std::vector<series>&) { return std::vector<series>{z}; }, r, 6};
    solve_stats stats;
    EXPECT_EQ(solve(sys, {}, &stats)[0], z);
    EXPECT_LE(stats.iterations, 3);
}

TEST(FixedPoint, ProgressiveMatchesFullPrecision)
{
    const ring r = zwr();
    const int bound = 10;
    const series z = series::variable(r, "z", bound), w = series::variable(r, "w", bound);
    fixed_point_system sys{{"a", "b"}, [&](const std::vector<series>& y) {
                               return std::vector<series>{z * (coefficient(1) + y[1]) * (coefficient(1) + y[0]),
                                                          w + z * y[0] * y[0]};
                           },
                           r, bound};
    solve_options full;
    full.progressive = false;
    const auto p = solve(sys), f = solve(sys, full);
    EXPECT_EQ(p[0], f[0]);
    EXPECT_EQ(p[1], f[1]);
    EXPECT_EQ(p[0], sys.rhs(p)[0]);
}

TEST(FixedPoint, DivergentSystemIsRejected)
{
    const ring r = zr();
    fixed_point_system sys{{"y"}, [&](const std::vector<series>& y) { return std::vector<series>{y[0] + coefficient(1)}; },
                           r, 4};
    EXPECT_THROW(solve(sys), series_error);
}

TEST(FixedPoint, WrongArityIsRejected)
{
    const ring r = zr();
    fixed_point_system sys{{"y", "x"}, [&](const std::vector<series>& y) { return std::vector<series>{y[0]}; }, r, 4};
    EXPECT_THROW(solve(sys), series_error);
}

TEST(Residual, ReportsFirstDifference)
{
    const ring r = zr();
    const auto same = make_residual("e", poly(r, 5, {0, 1, 2}), poly(r, 6, {0, 1, 2}));
    EXPECT_TRUE(same.vanishes());
    EXPECT_EQ(same.checked_to, 5);
    const auto diff = make_residual("e", poly(r, 5, {0, 1, 2}), poly(r, 5, {0, 1, 3}));
    EXPECT_FALSE(diff.vanishes());
    EXPECT_EQ(diff.first_nonzero, 2);
}

TEST(LinearUnit, LoopEquation)
{
    // L (1 + q - w) = 2q(1 + D) with D = 0 gives L = 2q / (1 + q - w).
    const ring r({"q", "w"});
    const series q = series::variable(r, "q", 6), w = series::variable(r, "w", 6);
    const series L = div_unit(coefficient(2) * q, coefficient(1) + q - w);
    EXPECT_EQ(L.coeff({1, 0}), 2);
    EXPECT_EQ(L, truncate(coefficient(2) * q * (coefficient(1) - L) + L * (w + q), 6));
}
