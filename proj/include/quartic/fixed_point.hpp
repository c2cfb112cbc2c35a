#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "quartic/series_functions.hpp"

namespace quartic {

// y = rhs(y) for a vector of unknown series. The system must be contracting:
// each coefficient of rhs(y) of degree d depends only on coefficients of y
// of degree < d, possibly after finitely many rounds.
template <class C>
struct basic_fixed_point_system {
    std::vector<std::string> unknowns;
    std::function<std::vector<basic_series<C>>(const std::vector<basic_series<C>>&)> rhs;
    ring space;
    int bound;
};

using fixed_point_system = basic_fixed_point_system<coefficient>;

struct solve_options {
    // Degrees computed ahead of the settled part while climbing.
    int margin = 2;
    // Iterations allowed without the settled degree moving.
    int stall_limit = 8;
    // Start at low precision and climb; otherwise iterate at full precision.
    bool progressive = true;
};

struct solve_stats {
    int iterations = 0;
};

// Iterates from zero until the iterate reproduces itself through `bound`.
// The working precision follows the settled degree plus a margin, so early
// iterations are cheap; the last round is always at the full bound.
template <class C>
std::vector<basic_series<C>> solve(const basic_fixed_point_system<C>& sys, const solve_options& opt = {},
                                   solve_stats* stats = nullptr)
{
    using S = basic_series<C>;
    const int target = sys.bound;
    const std::size_t n = sys.unknowns.size();
    int p = opt.progressive ? std::min(target, std::max(0, opt.margin)) : target;
    std::vector<S> y(n, S(sys.space, p));

    int best = -1;
    int since_best = 0;
    const int budget = 4 * (target + opt.margin + opt.stall_limit + 4);
    for (int iter = 1; iter <= budget; ++iter) {
        std::vector<S> fy = sys.rhs(y);
        if (fy.size() != n)
            throw series_error("fixed point right-hand side returned " + std::to_string(fy.size()) + " series for " +
                               std::to_string(n) + " unknowns");

        int rhs_bound = INT_MAX;
        int diff = INT_MAX;
        std::string lagging;
        for (std::size_t i = 0; i < n; ++i) {
            fy[i].require_same_ring(y[i]);
            if (fy[i].bound() < rhs_bound) {
                rhs_bound = fy[i].bound();
                lagging = sys.unknowns[i];
            }
            diff = std::min(diff, first_difference(y[i], fy[i]));
        }
        const int settled = std::min({diff == INT_MAX ? p : diff - 1, rhs_bound, p});
        if (stats)
            stats->iterations = iter;

        if (settled >= p && p == target) {
            for (auto& f : fy)
                f = truncate(f, target);
            return fy;
        }
        if (settled > best) {
            best = settled;
            since_best = 0;
        } else if (++since_best > opt.stall_limit) {
            if (rhs_bound < p)
                throw precision_loss("right-hand side for " + lagging + " is only known to degree " +
                                     std::to_string(rhs_bound) + ", needed " + std::to_string(p));
            throw stagnation("fixed point stuck at degree " + std::to_string(settled) + " of " +
                             std::to_string(target));
        }

        if (opt.progressive)
            p = std::min(target, std::max(p, settled + 1 + opt.margin));
        for (std::size_t i = 0; i < n; ++i)
            y[i] = truncate(fy[i], p).with_bound(p);
    }
    throw non_convergence("no fixed point through degree " + std::to_string(target) + " after " +
                          std::to_string(budget) + " iterations");
}

// Per-equation residual lhs - rhs, reported as the lowest degree where the
// two sides differ (INT_MAX when they agree through the common bound).
struct residual {
    std::string equation;
    int first_nonzero;
    int checked_to;

    bool vanishes() const { return first_nonzero == INT_MAX; }
};

template <class C>
residual make_residual(std::string equation, const basic_series<C>& lhs, const basic_series<C>& rhs)
{
    return residual{std::move(equation), first_difference(lhs, rhs), std::min(lhs.bound(), rhs.bound())};
}

} // namespace quartic
