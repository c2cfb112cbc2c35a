#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "quartic/series.hpp"

namespace quartic::testing {

inline ring zr() { return ring({"z"}); }
inline ring zwr() { return ring({"z", "w"}); }

// c0 + c1 z + c2 z^2 + ... in a univariate ring.
inline series poly(const ring& r, int bound, std::initializer_list<long> coefs)
{
    std::vector<series::term> t;
    unsigned e = 0;
    for (long c : coefs)
        t.push_back({monomial{e++}, coefficient(c)});
    return series(r, bound, std::move(t));
}

// Sparse series in (z,w) with small integer coefficients.
inline series random_series(std::mt19937& gen, const ring& r, int bound, bool zero_constant = false)
{
    std::uniform_int_distribution<int> coef(-4, 4), take(0, 2);
    std::vector<series::term> t;
    for (unsigned a = 0; static_cast<int>(a) <= bound; ++a)
        for (unsigned b = 0; static_cast<int>(a + b) <= bound; ++b) {
            if ((zero_constant && a + b == 0) || take(gen) != 0)
                continue;
            t.push_back({monomial{a, b}, coefficient(coef(gen))});
        }
    return series(r, bound, std::move(t));
}

} // namespace quartic::testing
