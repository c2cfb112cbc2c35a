#pragma once

#include <string>
#include <vector>

#include "quartic/fixed_point.hpp"

namespace quartic {

// z marks faces (minus one), w marks 2-vertices. z carries the truncation
// degree; w is a parameter, so every z-degree holds a polynomial in w.
inline ring quadrangulation_ring() { return ring({"z", "w"}, {1, 0}); }

inline constexpr std::size_t var_z = 0;
inline constexpr std::size_t var_w = 1;

// Simple quadrangulations counted by faces.
struct simple_quadrangulations {
    series U;  // U = z (1 + U)^2
    series S;  // 3-connected simple quadrangulations, univariate in z
    series Q, R, N0, N1, N2;
    std::vector<residual> residuals;
};

// Rooted quadrangulations with every 2-vertex marked by w.
struct arbitrary_quadrangulations {
    series A0, A1, A_hat, A_tilde;
    series Q0, Q1, E;
    series B0, B1, B0_star;
    std::vector<residual> residuals;

    series total() const { return B0 + B1 + B0_star; }
};

namespace detail {

inline series constant(const ring& r, long c, int bound) { return series::constant(r, coefficient(c), bound); }

inline series shift_w(const series& s, unsigned k) { return div_monomial(s, var_w, k); }

} // namespace detail

// S(z) = 2z/(1+z) - z - U^2 / (z (1 + 2U)^3), in the univariate ring (z).
inline series three_connected_quadrangulations(int bound, series* catalan = nullptr)
{
    ring r({"z"});
    const series z = series::variable(r, "z", bound + 1);
    const series one = detail::constant(r, 1, bound + 1);
    fixed_point_system sys{{"U"}, [&](const std::vector<series>& y) {
                               series t = one + y[0];
                               return std::vector<series>{z * t * t};
                           },
                           r, bound + 1};
    series U = solve(sys)[0];
    series S = div_unit(coefficient(2) * z, one + z) - z -
               div_monomial(div_unit(U * U, pow(one + coefficient(2) * U, 3)), 0, 1);
    if (catalan)
        *catalan = U;
    return truncate(S, bound);
}

inline simple_quadrangulations solve_simple_quadrangulations(int bound, const solve_options& opt = {})
{
    const ring r = quadrangulation_ring();
    simple_quadrangulations out{.U = series(ring({"z"}), 0), .S = series(ring({"z"}), 0),
                                .Q = series(r, 0), .R = series(r, 0), .N0 = series(r, 0),
                                .N1 = series(r, 0), .N2 = series(r, 0), .residuals = {}};
    out.S = three_connected_quadrangulations(bound, &out.U);

    const series z = series::variable(r, "z", bound);
    const series w = series::variable(r, "w", bound);
    const coefficient half(1, 2);
    const series z2w3 = series::single(r, monomial{2, 3}, coefficient(1), bound);

    auto n_tilde = [&](const series& N0, const series& N1, const series& N2) {
        return N0 + detail::shift_w(N1, 1) + detail::shift_w(N2, 2);
    };
    auto equations = [&](const series& R, const series& N0, const series& N1, const series& N2) {
        const series Nt = n_tilde(N0, N1, N2);
        std::vector<series> rhs;
        rhs.push_back(compose(out.S, {z + coefficient(2) * Nt + R}));
        rhs.push_back((Nt + R) * (Nt + R + N0 + half * detail::shift_w(N1, 1)));
        rhs.push_back(coefficient(2) * z * w * (Nt + R + N0 + half * N1));
        rhs.push_back(z2w3 + z * w * (half * N1 + N2));
        return rhs;
    };

    fixed_point_system sys{{"R", "N0", "N1", "N2"},
                           [&](const std::vector<series>& y) { return equations(y[0], y[1], y[2], y[3]); }, r,
                           bound};
    auto y = solve(sys, opt);
    out.R = y[0];
    out.N0 = y[1];
    out.N1 = y[2];
    out.N2 = y[3];
    out.Q = z + coefficient(2) * (out.N0 + out.N1 + out.N2) + out.R;

    auto check = equations(out.R, out.N0, out.N1, out.N2);
    const char* names[] = {"R = S(z + 2N + R)", "N0 = (N + R)(N + R + N0 + N1/2w)", "N1 = 2zw(N + R + N0 + N1/2)",
                           "N2 = z^2 w^3 + zw(N1/2 + N2)"};
    for (std::size_t i = 0; i < 4; ++i)
        out.residuals.push_back(make_residual(names[i], y[i], check[i]));
    out.residuals.push_back(
        make_residual("Q = z + 2(N0 + N1 + N2) + R", out.Q,
                      z + coefficient(2) * (out.N0 + out.N1 + out.N2) + out.R));
    return out;
}

namespace detail {

struct arbitrary_terms {
    series A_tilde, A_hat, Q0, Q1, E;
};

// Everything on the right of the A-system that does not depend on which
// equation is being formed.
inline arbitrary_terms arbitrary_quadrangulation_terms(const simple_quadrangulations& sq, const series& A0,
                                                       const series& A1, int bound)
{
    const ring& r = A0.space();
    const series z = series::variable(r, "z", bound);
    const series w = series::variable(r, "w", bound);
    const series one = constant(r, 1, bound);
    const coefficient two(2);

    const series A1w = shift_w(A1, 1);
    series At = A0 + two * A1w;
    series Ah = A0 + A1 + A1w;
    const series s = (one + At) * (one + At);
    const series at2 = two * At + At * At;
    const series t = div_unit(w + at2, s);

    substitution sub(r, {z * s, t}, bound);
    const series N0c = sub(sq.N0);
    const series N1c = sub(shift_w(sq.N1, 1));
    const series N2c = sub(shift_w(sq.N2, 2));
    const series Rc = sub(sq.R);

    series Q1 = N1c + two * t * N2c;
    series Q0 = s * (two * N0c + t * N1c + Rc) + at2 * Q1;
    const series At2 = At * At;
    series E = z * pow(one + At, 4) - coefficient(4) * z * At2 + coefficient(4) * z * w * At2;
    return {std::move(At), std::move(Ah), std::move(Q0), std::move(Q1), std::move(E)};
}

} // namespace detail

inline arbitrary_quadrangulations solve_arbitrary_quadrangulations(const simple_quadrangulations& sq, int bound,
                                                                   const solve_options& opt = {})
{
    const ring r = quadrangulation_ring();
    const series z = series::variable(r, "z", bound);
    const series w = series::variable(r, "w", bound);
    const series one = detail::constant(r, 1, bound);
    const coefficient two(2);

    auto equations = [&](const series& A0, const series& A1, detail::arbitrary_terms& k) {
        k = detail::arbitrary_quadrangulation_terms(sq, A0, A1, bound);
        const series& At = k.A_tilde;
        const series& Ah = k.A_hat;
        series a0 = two * z * At * (one + Ah) +
                    z * (k.Q0 + k.Q1 + k.E + two * z * At * (w - coefficient(1)) +
                         two * z * At * At * (coefficient(1) - w));
        series a1 = z * w * (one + Ah);
        return std::vector<series>{std::move(a0), std::move(a1)};
    };

    detail::arbitrary_terms k{series(r, 0), series(r, 0), series(r, 0), series(r, 0), series(r, 0)};
    fixed_point_system sys{{"A0", "A1"},
                           [&](const std::vector<series>& y) {
                               detail::arbitrary_terms scratch = k;
                               return equations(y[0], y[1], scratch);
                           },
                           r, bound};
    auto y = solve(sys, opt);
    auto check = equations(y[0], y[1], k);

    arbitrary_quadrangulations out{.A0 = y[0], .A1 = y[1], .A_hat = k.A_hat, .A_tilde = k.A_tilde,
                                   .Q0 = k.Q0, .Q1 = k.Q1, .E = k.E,
                                   .B0 = series(r, 0), .B1 = series(r, 0), .B0_star = series(r, 0),
                                   .residuals = {}};
    const series& At = out.A_tilde;
    const series& Ah = out.A_hat;
    const series At2 = At * At;
    out.B0 = two * z * (one + Ah) * (one + Ah - out.A1) + z * (out.Q0 + out.E - two * z * w * At2 - two * z * At);
    out.B1 = two * z * (one + Ah) * out.A1 + z * w * (out.Q1 + two * z * At2);
    out.B0_star = two * z * z * At;
    for (auto* b : {&out.B0, &out.B1, &out.B0_star})
        *b = truncate(*b, bound);

    out.residuals.push_back(make_residual("A0 = 2zA(1+A') + z(Q0 + Q1 + E + ...)", out.A0, check[0]));
    out.residuals.push_back(make_residual("A1 = zw(1 + A')", out.A1, check[1]));
    out.residuals.push_back(make_residual("A' = A0 + A1 + A1/w", out.A_hat, out.A0 + out.A1 + detail::shift_w(out.A1, 1)));
    out.residuals.push_back(make_residual("A~ = A0 + 2A1/w", out.A_tilde, out.A0 + two * detail::shift_w(out.A1, 1)));
    return out;
}

} // namespace quartic
