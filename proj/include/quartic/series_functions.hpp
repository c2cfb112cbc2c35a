#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quartic/series.hpp"

namespace quartic {

// Lowest weighted degree at which a and b differ, considering only degrees
// up to min(bounds); INT_MAX when they agree there.
template <class C>
int first_difference(const basic_series<C>& a, const basic_series<C>& b)
{
    a.require_same_ring(b);
    const ring& r = a.space();
    const int upto = std::min(a.bound(), b.bound());
    auto ta = a.terms(), tb = b.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        const bool take_a = j == tb.size() || (i < ta.size() && basic_series<C>::less(r, ta[i].mono, tb[j].mono));
        const bool take_b = i == ta.size() || (j < tb.size() && basic_series<C>::less(r, tb[j].mono, ta[i].mono));
        if (take_a || take_b) {
            int d = r.degree(take_a ? ta[i].mono : tb[j].mono);
            return d <= upto ? d : INT_MAX;
        }
        if (ta[i].coef != tb[j].coef) {
            int d = r.degree(ta[i].mono);
            return d <= upto ? d : INT_MAX;
        }
        ++i;
        ++j;
    }
    return INT_MAX;
}

// Lowers the bound to at most `bound`.
template <class C>
basic_series<C> truncate(const basic_series<C>& a, int bound)
{
    return bound >= a.bound() ? a : a.with_bound(bound);
}

template <class C>
basic_series<C> pow(const basic_series<C>& a, unsigned k)
{
    basic_series<C> result = basic_series<C>::constant(a.space(), C(1), a.bound());
    basic_series<C> base = a;
    bool first = true;
    while (k) {
        if (k & 1u) {
            result = first ? base : result * base;
            first = false;
        }
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

// a / var^k, every term must be divisible.
template <class C>
basic_series<C> div_monomial(const basic_series<C>& a, std::size_t var, unsigned k)
{
    const ring& r = a.space();
    std::vector<typename basic_series<C>::term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
        if (t.mono[var] < k)
            throw inexact_division("division by " + r.name(var) + "^" + std::to_string(k) + " is not exact",
                                   r.render(t.mono));
        monomial m = t.mono;
        m.set(var, t.mono[var] - k);
        out.push_back({m, t.coef});
    }
    return basic_series<C>(r, a.bound() - static_cast<int>(k) * r.weight(var), std::move(out));
}

template <class C>
basic_series<C> mul_monomial(const basic_series<C>& a, std::size_t var, unsigned k)
{
    const ring& r = a.space();
    std::vector<typename basic_series<C>::term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
        monomial m = t.mono;
        m.set(var, t.mono[var] + k);
        out.push_back({m, t.coef});
    }
    return basic_series<C>(r, a.bound() + static_cast<int>(k) * r.weight(var), std::move(out));
}

namespace detail {

// The weight-0 part of a unit must be a nonzero constant.
template <class C>
C unit_constant(const basic_series<C>& a)
{
    const ring& r = a.space();
    C c0(0);
    for (const auto& t : a.terms()) {
        if (r.degree(t.mono) > 0)
            break;
        if (t.mono != monomial{})
            throw non_unit_divisor("divisor has a non-constant part of degree 0: " + r.render(t.mono));
        c0 = t.coef;
    }
    if (c0 == 0)
        throw non_unit_divisor("divisor has zero constant term");
    return c0;
}

} // namespace detail

// Multiplicative inverse by Newton iteration, y <- y (2 - a y).
template <class C>
basic_series<C> inverse(const basic_series<C>& a)
{
    const C c0 = detail::unit_constant(a);
    const ring& r = a.space();
    const int target = a.bound();
    basic_series<C> y = basic_series<C>::constant(r, C(1) / c0, std::min(0, target));
    while (y.bound() < target) {
        const int p = std::min(target, 2 * y.bound() + 1);
        basic_series<C> yp = y.with_bound(p);
        basic_series<C> ap = truncate(a, p);
        y = truncate(yp * (C(2) - ap * yp), p);
    }
    return y;
}

template <class C>
basic_series<C> div_unit(const basic_series<C>& a, const basic_series<C>& b)
{
    return a * inverse(b);
}

template <class C>
basic_series<C> operator/(const basic_series<C>& a, const basic_series<C>& b)
{
    return div_unit(a, b);
}

// exp(a) for a with zero constant term and positive valuation.
template <class C>
basic_series<C> exp_series(const basic_series<C>& a)
{
    if (a.valuation() <= 0)
        throw non_nilpotent_argument("exp of a series with a degree-0 part");
    const ring& r = a.space();
    basic_series<C> result = basic_series<C>::constant(r, C(1), a.bound());
    basic_series<C> term = result;
    for (unsigned k = 1;; ++k) {
        term = truncate(term * a, a.bound()) / C(k);
        if (term.is_zero())
            break;
        result = result + term;
    }
    return result;
}

// Antiderivative in `var` with zero constant of integration.
template <class C>
basic_series<C> integrate(const basic_series<C>& a, std::size_t var)
{
    const ring& r = a.space();
    std::vector<typename basic_series<C>::term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
        monomial m = t.mono;
        m.set(var, t.mono[var] + 1);
        out.push_back({m, t.coef / C(t.mono[var] + 1)});
    }
    return basic_series<C>(r, a.bound() + r.weight(var), std::move(out));
}

template <class C>
basic_series<C> differentiate(const basic_series<C>& a, std::size_t var)
{
    const ring& r = a.space();
    std::vector<typename basic_series<C>::term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
        if (t.mono[var] == 0)
            continue;
        monomial m = t.mono;
        m.set(var, t.mono[var] - 1);
        out.push_back({m, t.coef * C(t.mono[var])});
    }
    return basic_series<C>(r, a.bound() - r.weight(var), std::move(out));
}

// Sum of coefficients of each weighted degree, as a list indexed by degree.
template <class C>
std::vector<C> degree_sums(const basic_series<C>& a, int upto)
{
    std::vector<C> out(std::max(0, upto + 1), C(0));
    for (const auto& t : a.terms()) {
        int d = a.space().degree(t.mono);
        if (d >= 0 && d <= upto)
            out[d] += t.coef;
    }
    return out;
}

// Substitutes fixed argument series for the variables of outer series.
// Powers of the arguments are cached across calls, so one substitution
// object serves several outer series sharing the same arguments.
template <class C>
class basic_substitution {
public:
    using series_type = basic_series<C>;

    basic_substitution(const ring& outer, std::vector<series_type> args, std::optional<int> target = std::nullopt)
        : outer_(outer), args_(std::move(args)), target_(target)
    {
        if (args_.size() != outer_.size())
            throw incompatible_rings("substitution needs one argument per variable of " + outer_.describe());
        for (std::size_t i = 1; i < args_.size(); ++i)
            args_[0].require_same_ring(args_[i]);
        rho_num_ = -1;
        for (std::size_t i = 0; i < args_.size(); ++i) {
            const auto& a = args_[i];
            const int w = outer_.weight(i);
            if (w > 0) {
                if (a.valuation() < 1)
                    throw non_nilpotent_argument("argument for " + outer_.name(i) + " is not of positive order");
                // Track rho = min val/weight as a fraction.
                if (rho_num_ < 0 || static_cast<long>(a.valuation()) * rho_den_ < static_cast<long>(rho_num_) * w) {
                    rho_num_ = a.valuation();
                    rho_den_ = w;
                }
            } else if (a.constant_term() != 0) {
                throw non_nilpotent_argument("argument for " + outer_.name(i) + " has a nonzero constant term");
            }
        }
        powers_.resize(args_.size());
    }

    const ring& target_ring() const { return args_.front().space(); }

    series_type operator()(const series_type& f)
    {
        if (!(f.space() == outer_))
            throw incompatible_rings("outer series over " + f.space().describe() + ", expected " + outer_.describe());
        const ring& tr = target_ring();

        // Terms of f beyond its bound contribute at degree >= rho (Bo + 1).
        int bound = INT_MAX;
        if (rho_num_ > 0) {
            long top = static_cast<long>(rho_num_) * (f.bound() + 1);
            bound = static_cast<int>((top + rho_den_ - 1) / rho_den_) - 1;
        }
        if (target_)
            bound = std::min(bound, *target_);
        int arg_cap = INT_MIN;
        for (const auto& a : args_)
            arg_cap = std::max(arg_cap, a.bound());
        bound = std::min(bound, arg_cap);

        // Group terms by exponent of the first variable.
        unsigned top0 = f.max_exponent(0);
        std::vector<std::vector<const typename series_type::term*>> groups(top0 + 1);
        for (const auto& t : f.terms())
            groups[t.mono[0]].push_back(&t);

        auto inner = [&](unsigned e0) {
            std::vector<typename series_type::term> acc;
            int inner_bound = INT_MAX;
            for (const auto* t : groups[e0]) {
                series_type prod = series_type::constant(tr, t->coef, bound);
                for (std::size_t v = 1; v < args_.size(); ++v)
                    if (t->mono[v])
                        prod = truncate(prod * power(v, t->mono[v], bound), bound);
                inner_bound = std::min(inner_bound, prod.bound());
                for (const auto& pt : prod.terms())
                    acc.push_back(pt);
            }
            return series_type(tr, std::min(inner_bound, bound), std::move(acc));
        };

        series_type result(tr, bound);
        if (f.is_zero())
            return result;
        result = inner(top0);
        for (unsigned e = top0; e-- > 0;) {
            result = truncate(result * args_[0], bound);
            if (!groups[e].empty())
                result = result + inner(e);
        }
        return truncate(result, bound);
    }

private:
    const series_type& power(std::size_t v, unsigned e, int bound)
    {
        auto& cache = powers_[v];
        if (cache.empty())
            cache.push_back(series_type::constant(target_ring(), C(1), args_[v].bound()));
        while (cache.size() <= e)
            cache.push_back(truncate(cache.back() * args_[v], std::max(bound, args_[v].bound())));
        return cache[e];
    }

    ring outer_;
    std::vector<series_type> args_;
    std::optional<int> target_;
    int rho_num_ = -1;
    int rho_den_ = 1;
    std::vector<std::vector<series_type>> powers_;
};

using substitution = basic_substitution<coefficient>;

template <class C>
basic_series<C> compose(const basic_series<C>& f, std::vector<basic_series<C>> args,
                        std::optional<int> target = std::nullopt)
{
    basic_substitution<C> sub(f.space(), std::move(args), target);
    return sub(f);
}

} // namespace quartic
