#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "quartic/three_connected_maps.hpp"

namespace quartic {

// x marks vertices. Exponential series are kept as plain coefficient series;
// factorials only enter when counts are extracted.
inline ring vertex_ring() { return ring({"x"}); }

struct network_series {
    series D, L, S, P, F, S2, H1, H2;
    std::vector<residual> residuals;
};

struct graph_series {
    network_series net;
    series C_prime, C, G;
    std::vector<residual> residuals;
};

struct graph_counts {
    std::vector<mpz_class> all;        // g_n
    std::vector<mpz_class> connected;  // c_n
};

struct simple_map_series {
    network_series net;
    series M;
};

// [u^k v^(l-1)] of the double-edge kernel, scale * l/k * t_{k,l}. With
// scale 1/2 this is T2 / v for cores rooted at a double edge with a 2-face on
// its right; with scale 1 a double edge may be rooted at either of its edges.
inline series double_edge_kernel(const series& T, const coefficient& scale)
{
    std::vector<series::term> out;
    for (const auto& t : T.terms()) {
        const unsigned k = t.mono[0], l = t.mono[1];
        if (l == 0)
            continue;
        if (k == 0)
            throw non_integral_count("core with double edges and no simple edge");
        out.push_back({monomial{k, l - 1}, scale * coefficient(l) / coefficient(k) * t.coef});
    }
    return series(T.space(), T.bound() - 1, std::move(out));
}

namespace detail {

// Shared shape of the two network systems. `m` is 1 for labelled graphs and
// 2 for maps, where each network class may sit on either side of a pole.
struct network_shape {
    coefficient kernel_scale;  // multiplies T(A, Y) / (1 + D)
    coefficient h2_scale;      // multiplies x * kernel2(A, Y)
    coefficient y_d, y_dd;     // Y = y_d x D + y_dd x D^2 + F / x
    coefficient x_d, x_dd;     // X = F + x^2 (x_d D + x_dd D^2)
    coefficient f_h2;          // F = S2 + f_h2 H2
    coefficient p_dd, p_ddd, p_fd;
    coefficient l_scale;       // L = l_scale x (D - L)
    coefficient d_f;           // D = L + S + P + H1 + d_f F
    const char* name;
};

inline network_series solve_network(const series& T, const series& kernel2, const network_shape& shape, int bound,
                                    const solve_options& opt)
{
    const ring r = vertex_ring();
    const series x = series::variable(r, "x", bound);
    const series one = series::constant(r, 1, bound);
    const auto& s = shape;

    struct parts {
        series A, Y, X;
    };
    auto make_parts = [&](const series& D, const series& F) {
        series A = x * (one + D) * (one + D);
        series Y = s.y_d * x * D + s.y_dd * x * D * D + div_monomial(F, 0, 1);
        series X = F + x * x * (s.x_d * D + s.x_dd * D * D);
        return parts{std::move(A), std::move(Y), std::move(X)};
    };

    // Unknowns: D, L, S, P, F, S2, H1, H2.
    auto rhs = [&](const std::vector<series>& y) {
        const series &D = y[0], &L = y[1], &S = y[2], &P = y[3], &F = y[4], &S2 = y[5], &H1 = y[6], &H2 = y[7];
        parts k = make_parts(D, F);
        substitution sub(T.space(), {k.A, k.Y}, bound);
        std::vector<series> out(8, series(r, 0));
        out[0] = L + S + P + H1 + s.d_f * F;
        out[1] = s.l_scale * x * (D - L);
        out[2] = D * (D - S);
        out[3] = x * x * (s.p_dd * D * D + s.p_ddd * pow(D, 3)) + s.p_fd * F * D;
        out[4] = S2 + s.f_h2 * H2;
        out[5] = div_monomial(k.X * (k.X - S2), 0, 1);
        out[6] = s.kernel_scale * div_unit(sub(T), one + D);
        out[7] = s.h2_scale * x * sub(kernel2);
        return out;
    };

    fixed_point_system sys{{"D", "L", "S", "P", "F", "S2", "H1", "H2"}, rhs, r, bound};
    auto y = solve(sys, opt);
    network_series n{y[0], y[1], y[2], y[3], y[4], y[5], y[6], y[7], {}};

    const auto check = rhs(y);
    const char* lines[] = {"D = L + S + P + H1 + F", "L = x(D - L)",   "S = D(D - S)", "P = x^2 D^2 (...) + FD",
                           "F = S2 + H2",            "S2 = X(X - S2)/x", "H1 = T(A, Y) / (1 + D)", "H2 = x T2(A, Y)"};
    for (std::size_t i = 0; i < 8; ++i)
        n.residuals.push_back(make_residual(std::string(s.name) + ": " + lines[i], y[i], check[i]));
    return n;
}

} // namespace detail

inline network_series solve_graph_networks(const series& T, const series& kernel2, int bound,
                                           const solve_options& opt = {})
{
    const coefficient h(1, 2), z(0), o(1);
    return detail::solve_network(T, kernel2,
                                 {.kernel_scale = h, .h2_scale = h, .y_d = o, .y_dd = h, .x_d = o, .x_dd = h,
                                  .f_h2 = o, .p_dd = h, .p_ddd = coefficient(1, 6), .p_fd = o, .l_scale = h,
                                  .d_f = o, .name = "graphs"},
                                 bound, opt);
}

inline network_series solve_map_networks(const series& T, const series& kernel2, int bound,
                                         const solve_options& opt = {})
{
    const coefficient h(1, 2), o(1), two(2);
    return detail::solve_network(T, kernel2,
                                 {.kernel_scale = o, .h2_scale = o, .y_d = two, .y_dd = o, .x_d = two, .x_dd = o,
                                  .f_h2 = h, .p_dd = coefficient(3), .p_ddd = o, .p_fd = two, .l_scale = two,
                                  .d_f = two, .name = "simple maps"},
                                 bound, opt);
}

// 4x C'(x) = D - L - L^2 - F - x^2 D^2 / 2, C(0) = 0, G = exp(C).
inline graph_series connected_and_all_graphs(network_series net)
{
    const series& D = net.D;
    const series& L = net.L;
    const series x = series::variable(D.space(), "x", D.bound());
    const coefficient half(1, 2);
    series Cp = div_monomial(D - L - L * L - net.F - half * x * x * D * D, 0, 1) / coefficient(4);
    series C = integrate(Cp, 0);
    series G = exp_series(C);
    graph_series g{std::move(net), Cp, C, G, {}};
    g.residuals.push_back(make_residual("G' = C' G", differentiate(g.G, 0), g.C_prime * g.G));
    return g;
}

inline graph_counts extract_graph_counts(const graph_series& g, int max_n)
{
    graph_counts out;
    const int top = std::min({max_n, g.C.bound(), g.G.bound()});
    for (int n = 0; n <= top; ++n) {
        const mpz_class f = factorial(n);
        const unsigned e = static_cast<unsigned>(n);
        mpz_class c = require_integer(g.C.coeff({e}) * f, "c_" + std::to_string(n));
        mpz_class a = require_integer(g.G.coeff({e}) * f, "g_" + std::to_string(n));
        if (c < 0 || a < 0)
            throw non_integral_count("negative graph count at n = " + std::to_string(n));
        out.connected.push_back(std::move(c));
        out.all.push_back(std::move(a));
    }
    return out;
}

// M(x) = D - L - L^2 - 3 x^2 D^2 - 2F.
inline simple_map_series simple_maps(network_series net)
{
    const series x = series::variable(net.D.space(), "x", net.D.bound());
    series M = net.D - net.L - net.L * net.L - coefficient(3) * x * x * net.D * net.D - coefficient(2) * net.F;
    return {std::move(net), std::move(M)};
}

inline std::vector<mpz_class> extract_simple_map_counts(const simple_map_series& s, int max_n)
{
    std::vector<mpz_class> out;
    const int top = std::min(max_n, s.M.bound());
    for (int n = 0; n <= top; ++n) {
        mpz_class m = require_integer(s.M.coeff({static_cast<unsigned>(n)}), "M_" + std::to_string(n));
        if (m < 0)
            throw non_integral_count("negative simple map count at n = " + std::to_string(n));
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace quartic
