#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quartic/quadrangulations.hpp"

namespace quartic {

// q marks half the ordinary edges, w marks 2-faces.
inline ring map_ring() { return ring({"q", "w"}); }
// u marks half the simple edges, v marks double edges.
inline ring core_ring() { return ring({"u", "v"}); }

inline constexpr std::size_t var_q = 0;

// Rooted 4-regular maps split by root class, and the decomposition series.
struct map_series {
    series M0, M1, M0_star;
    series D, L, S0, S1, P0, P1, F, H;
    series V, S2, H2;  // V is the second coordinate of the change of variables
    std::vector<residual> residuals;

    series total() const { return M0 + M1 + M0_star; }
};

// 3-connected cores and the inverse change of variables.
struct three_connected_series {
    series a, b;    // q = a(u,v), w = b(u,v)
    series T;       // root on a simple edge
    series T2;      // root on a double edge with a 2-face on its right
    series T2_by_v; // T2 / v
    std::vector<residual> residuals;
};

// Quadrangulation with n faces and j 2-vertices <-> 4-regular map with n
// vertices, j 2-faces and 2(n - j) ordinary edges: z^n w^j -> q^(n-j) w^j.
inline series dualize(const series& b)
{
    const ring r = map_ring();
    std::vector<series::term> out;
    out.reserve(b.size());
    for (const auto& t : b.terms()) {
        const unsigned n = t.mono[var_z], j = t.mono[var_w];
        if (j > n)
            throw inexact_division("quadrangulation term has more 2-vertices than faces",
                                   b.space().render(t.mono));
        out.push_back({monomial{n - j, j}, t.coef});
    }
    return series(r, b.bound(), std::move(out));
}

inline map_series solve_map_system(const arbitrary_quadrangulations& aq)
{
    const ring r = map_ring();
    const coefficient two(2), half(1, 2);
    map_series m{dualize(aq.B0), dualize(aq.B1), dualize(aq.B0_star),
                 series(r, 0), series(r, 0), series(r, 0), series(r, 0), series(r, 0), series(r, 0),
                 series(r, 0), series(r, 0), series(r, 0), series(r, 0), series(r, 0), {}};
    const int bound = m.M0.bound();
    const series q = series::variable(r, "q", bound);
    const series w = series::variable(r, "w", bound);
    const series one = series::constant(r, 1, bound);

    const series M1_over_w = div_monomial(m.M1, var_w, 1);
    const series qM1w = q * M1_over_w;
    m.D = m.M0 + qM1w + w * div_monomial(m.M0_star, var_q, 1);
    m.L = div_unit(two * q * (one + m.D), one + q - w);
    m.S1 = half * m.L * m.L;
    m.S0 = div_unit(m.D * m.D - m.D * m.S1 - half * m.L * m.L, one + m.D);
    m.P1 = two * q * q * m.D * m.D;
    m.F = half * div_monomial(qM1w - m.S1 - m.P1, var_q, 1);
    m.P0 = q * q * (one + m.D + m.D * m.D + pow(m.D, 3)) + two * q * m.D * m.F;
    m.H = m.M0 - m.S0 - m.P0 - m.L;

    m.V = w + q * (two * m.D + m.D * m.D) + m.F;
    m.S2 = div_unit(m.V * m.V, one + m.V);
    m.H2 = m.F - m.S2;

    const series D_alt = half * div_monomial(m.M0_star, var_q, 2);
    auto& res = m.residuals;
    res.push_back(make_residual("D = M0 + (q/w) M1 + (w/q) M0*", m.D, m.M0 + qM1w + w * div_monomial(m.M0_star, var_q, 1)));
    res.push_back(make_residual("D = M0* / 2q^2", m.D, D_alt));
    res.push_back(make_residual("L = 2q(1 + D - L) + L(w + q)", m.L, two * q * (one + m.D - m.L) + m.L * (w + q)));
    res.push_back(make_residual("S1 = L^2 / 2", m.S1, half * m.L * m.L));
    res.push_back(make_residual("S0 = D(D - S0 - S1) - L^2 / 2", m.S0,
                                m.D * (m.D - m.S0 - m.S1) - half * m.L * m.L));
    res.push_back(make_residual("P1 = 2 q^2 D^2", m.P1, two * q * q * m.D * m.D));
    res.push_back(make_residual("M1 = (w/q)(S1 + P1 + 2qF)", m.M1,
                                div_monomial(w * (m.S1 + m.P1 + two * q * m.F), var_q, 1)));
    res.push_back(make_residual("P0 = q^2 (1 + D + D^2 + D^3) + 2qDF", m.P0,
                                q * q * (one + m.D + m.D * m.D + pow(m.D, 3)) + two * q * m.D * m.F));
    res.push_back(make_residual("M0 = L + S0 + P0 + H", m.M0, m.L + m.S0 + m.P0 + m.H));
    res.push_back(make_residual("S2 = V(V - S2)", m.S2, m.V * (m.V - m.S2)));
    res.push_back(make_residual("F = S2 + H2", m.F, m.S2 + m.H2));
    return m;
}

// Inverts u = q(1 + D)^2, v = w + q(2D + D^2) + F by fixed-point reversion.
// The Jacobian at the origin is the identity, so each round fixes one more
// degree.
inline std::pair<series, series> invert_change_of_vars(const series& D, const series& F, int bound,
                                                       const solve_options& opt = {})
{
    const ring r = core_ring();
    const series u = series::variable(r, "u", bound);
    const series v = series::variable(r, "v", bound);
    const series one = series::constant(r, 1, bound);
    const coefficient two(2);
    fixed_point_system sys{{"a", "b"},
                           [&](const std::vector<series>& y) {
                               substitution sub(D.space(), {y[0], y[1]}, bound);
                               const series Dc = sub(D);
                               const series Fc = sub(F);
                               const series onep = one + Dc;
                               return std::vector<series>{div_unit(u, onep * onep),
                                                          v - y[0] * (two * Dc + Dc * Dc) - Fc};
                           },
                           r, bound};
    auto y = solve(sys, opt);
    return {y[0], y[1]};
}

inline three_connected_series compute_three_connected(const map_series& m, int bound, const solve_options& opt = {})
{
    const ring r = core_ring();
    const coefficient two(2);
    auto [a, b] = invert_change_of_vars(m.D, m.F, bound, opt);
    substitution back(m.D.space(), {a, b}, bound);
    const series Dc = back(m.D);
    const series one = series::constant(r, 1, bound);
    const series u = series::variable(r, "u", bound);
    const series v = series::variable(r, "v", bound);

    three_connected_series out{a, b, truncate((one + Dc) * back(m.H), bound), series(r, 0), series(r, 0), {}};
    out.T2_by_v = back(m.H2);
    out.T2 = truncate(mul_monomial(out.T2_by_v, 1, 1), bound);

    auto& res = out.residuals;
    const ring mr = map_ring();
    const series q = series::variable(mr, "q", bound);
    const series mone = series::constant(mr, 1, bound);
    res.push_back(make_residual("u = a (1 + D(a,b))^2", u, a * (one + Dc) * (one + Dc)));
    res.push_back(make_residual("v = V(a,b)", v, back(m.V)));
    res.push_back(make_residual("S2(a,b) = v^2 / (1 + v)", back(m.S2), div_unit(v * v, one + v)));

    // The other direction: (a, b) after the forward map is the identity.
    const series fu = q * (mone + m.D) * (mone + m.D);
    substitution forward(r, {fu, m.V}, std::min(m.D.bound(), m.F.bound()));
    res.push_back(make_residual("a(q(1+D)^2, V) = q", forward(a), q));
    res.push_back(make_residual("b(q(1+D)^2, V) = w", forward(b), series::variable(mr, "w", bound)));
    res.push_back(make_residual("H = T(q(1+D)^2, V) / (1 + D)", m.H, div_unit(forward(out.T), mone + m.D)));
    res.push_back(make_residual("H2 = T2(q(1+D)^2, V) / V", m.H2, forward(out.T2_by_v)));
    return out;
}

// t_{k,l}, T_n = t_{n,0} and t_n = T_n (n-1)! / 8.
struct three_connected_counts {
    int degree = 0;
    std::map<std::pair<int, int>, mpz_class> t;
    std::vector<mpz_class> rooted;    // T_n
    std::vector<mpz_class> labelled;  // t_n

    mpz_class at(int k, int l) const
    {
        auto it = t.find({k, l});
        return it == t.end() ? mpz_class(0) : it->second;
    }
};

inline three_connected_counts extract_counts(const series& T, int degree)
{
    three_connected_counts c;
    c.degree = std::min(degree, T.bound());
    for (const auto& term : T.terms()) {
        const int k = static_cast<int>(term.mono[0]), l = static_cast<int>(term.mono[1]);
        if (k + l > c.degree)
            continue;
        mpz_class n = require_integer(term.coef, "t(" + std::to_string(k) + "," + std::to_string(l) + ")");
        if (n < 0)
            throw non_integral_count("negative 3-connected count at (" + std::to_string(k) + "," + std::to_string(l) + ")");
        c.t.emplace(std::pair{k, l}, std::move(n));
    }
    c.rooted.assign(c.degree + 1, 0);
    c.labelled.assign(c.degree + 1, 0);
    for (int n = 1; n <= c.degree; ++n) {
        c.rooted[n] = c.at(n, 0);
        mpz_class num = c.rooted[n] * factorial(n - 1);
        if (num % 8 != 0)
            throw non_integral_count("T_" + std::to_string(n) + " (n-1)! is not divisible by 8");
        c.labelled[n] = num / 8;
    }
    return c;
}

} // namespace quartic
