#pragma once

#include <gmpxx.h>

#include <string>

#include "quartic/errors.hpp"

namespace quartic {

// Exact rational coefficient. gmpxx keeps results of arithmetic in lowest
// terms with a positive denominator.
using coefficient = mpq_class;

inline bool is_integral(const mpq_class& c) { return c.get_den() == 1; }

inline std::string to_decimal(const mpq_class& c) { return c.get_str(); }

inline mpz_class factorial(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Numerator of c, throwing non_integral_count (tagged with `what`) when c is
// not an integer.
inline mpz_class require_integer(const mpq_class& c, const std::string& what)
{
    if (!is_integral(c))
        throw non_integral_count(what + " is not an integer: " + c.get_str());
    return c.get_num();
}

// Rooted 4-regular maps with 2n edges (equivalently rooted maps with n edges):
// 2 * 3^n / ((n+1)(n+2)) * binom(2n, n).
inline mpz_class rooted_map_count(unsigned long n)
{
    mpz_class three_n;
    mpz_ui_pow_ui(three_n.get_mpz_t(), 3, n);
    mpz_class num = 2 * three_n * binomial(2 * n, n);
    mpz_class den = mpz_class((n + 1) * (n + 2));
    return num / den;
}

} // namespace quartic
