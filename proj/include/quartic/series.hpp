#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "quartic/coefficient.hpp"
#include "quartic/errors.hpp"

namespace quartic {

inline constexpr std::size_t max_variables = 4;

// Exponent vector, one 16-bit lane per variable.
class monomial {
public:
    constexpr monomial() = default;

    monomial(std::initializer_list<unsigned> exponents)
    {
        std::size_t i = 0;
        for (unsigned e : exponents)
            set(i++, e);
    }

    static constexpr monomial from_bits(std::uint64_t bits)
    {
        monomial m;
        m.bits_ = bits;
        return m;
    }

    constexpr unsigned operator[](std::size_t i) const
    {
        return static_cast<unsigned>((bits_ >> (16 * i)) & 0xffffu);
    }

    void set(std::size_t i, unsigned e)
    {
        if (i >= max_variables || e > 0xffffu)
            throw series_error("monomial exponent out of range");
        bits_ = (bits_ & ~(std::uint64_t{0xffff} << (16 * i))) | (std::uint64_t{e} << (16 * i));
    }

    constexpr std::uint64_t bits() const { return bits_; }

    // Lane-wise sum; callers keep every lane below 2^16.
    friend constexpr monomial operator+(monomial a, monomial b) { return from_bits(a.bits_ + b.bits_); }

    friend constexpr bool operator==(monomial, monomial) = default;
    friend constexpr auto operator<=>(monomial, monomial) = default;

private:
    std::uint64_t bits_ = 0;
};

// Ordered variable names with non-negative truncation weights. Copies share
// the underlying data.
class ring {
public:
    ring(std::vector<std::string> names, std::vector<int> weights = {})
    {
        if (names.empty() || names.size() > max_variables)
            throw series_error("a ring needs between 1 and 4 variables");
        if (weights.empty())
            weights.assign(names.size(), 1);
        if (weights.size() != names.size())
            throw series_error("one weight per variable is required");
        bool positive = false;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (weights[i] < 0)
                throw series_error("negative variable weight");
            positive = positive || weights[i] > 0;
            for (std::size_t j = 0; j < i; ++j)
                if (names[i] == names[j])
                    throw series_error("duplicate variable name " + names[i]);
        }
        if (!positive)
            throw series_error("at least one variable must have positive weight");
        d_ = std::make_shared<const data>(data{std::move(names), std::move(weights)});
    }

    std::size_t size() const { return d_->names.size(); }
    const std::string& name(std::size_t i) const { return d_->names[i]; }
    int weight(std::size_t i) const { return d_->weights[i]; }
    const std::vector<std::string>& names() const { return d_->names; }
    const std::vector<int>& weights() const { return d_->weights; }

    std::optional<std::size_t> find(std::string_view name) const
    {
        for (std::size_t i = 0; i < size(); ++i)
            if (d_->names[i] == name)
                return i;
        return std::nullopt;
    }

    std::size_t index(std::string_view name) const
    {
        if (auto i = find(name))
            return *i;
        throw incompatible_rings("no variable named " + std::string(name));
    }

    int degree(monomial m) const
    {
        int d = 0;
        for (std::size_t i = 0; i < size(); ++i)
            d += d_->weights[i] * static_cast<int>(m[i]);
        return d;
    }

    monomial unit(std::size_t var, unsigned e = 1) const
    {
        monomial m;
        m.set(var, e);
        return m;
    }

    std::string render(monomial m) const
    {
        std::string out;
        for (std::size_t i = 0; i < size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!out.empty())
                out += ' ';
            out += d_->names[i] + '^' + std::to_string(m[i]);
        }
        return out.empty() ? "1" : out;
    }

    std::string describe() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < size(); ++i)
            out += (i ? "," : "") + d_->names[i];
        return out + ")";
    }

    friend bool operator==(const ring& a, const ring& b)
    {
        return a.d_ == b.d_ || (a.d_->names == b.d_->names && a.d_->weights == b.d_->weights);
    }

private:
    struct data {
        std::vector<std::string> names;
        std::vector<int> weights;
    };
    std::shared_ptr<const data> d_;
};

template <class C>
struct series_term {
    monomial mono;
    C coef;
};

// Truncated multivariate power series. Every coefficient of weighted degree
// <= bound() is exact; nothing is known above it. Terms are kept sorted by
// (weighted degree, exponent bits) with no zero coefficients.
template <class C>
class basic_series {
public:
    using coefficient_type = C;
    using term = series_term<C>;

    basic_series(ring r, int bound) : ring_(std::move(r)), bound_(bound) {}

    basic_series(ring r, int bound, std::vector<term> terms)
        : ring_(std::move(r)), bound_(bound), terms_(std::move(terms))
    {
        normalize();
    }

    static basic_series constant(const ring& r, C c, int bound)
    {
        return basic_series(r, bound, {term{monomial{}, std::move(c)}});
    }

    static basic_series variable(const ring& r, std::string_view name, int bound)
    {
        return basic_series(r, bound, {term{r.unit(r.index(name)), C(1)}});
    }

    static basic_series single(const ring& r, monomial m, C c, int bound)
    {
        return basic_series(r, bound, {term{m, std::move(c)}});
    }

    const ring& space() const { return ring_; }
    int bound() const { return bound_; }
    std::span<const term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    int degree_of(monomial m) const { return ring_.degree(m); }

    // Lowest weighted degree carrying a nonzero coefficient, or bound()+1.
    int valuation() const { return terms_.empty() ? bound_ + 1 : ring_.degree(terms_.front().mono); }

    C coeff(monomial m) const
    {
        auto it = find(m);
        return it == terms_.end() ? C(0) : it->coef;
    }

    C coeff(std::initializer_list<unsigned> exponents) const { return coeff(monomial(exponents)); }

    C constant_term() const { return coeff(monomial{}); }

    unsigned max_exponent(std::size_t var) const
    {
        unsigned e = 0;
        for (const auto& t : terms_)
            e = std::max(e, t.mono[var]);
        return e;
    }

    // Coefficients of weighted degree <= upto agree (same ring required).
    bool agrees_with(const basic_series& other, int upto) const
    {
        require_same_ring(other);
        auto lo = [&](const basic_series& s) {
            std::vector<const term*> v;
            for (const auto& t : s.terms_)
                if (ring_.degree(t.mono) <= upto)
                    v.push_back(&t);
            return v;
        };
        auto a = lo(*this), b = lo(other);
        if (a.size() != b.size())
            return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i]->mono != b[i]->mono || a[i]->coef != b[i]->coef)
                return false;
        return true;
    }

    void require_same_ring(const basic_series& other) const
    {
        if (!(ring_ == other.ring_))
            throw incompatible_rings("series over " + ring_.describe() + " and " + other.ring_.describe());
    }

    friend bool operator==(const basic_series& a, const basic_series& b)
    {
        if (!(a.ring_ == b.ring_) || a.bound_ != b.bound_ || a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef)
                return false;
        return true;
    }

    friend basic_series operator+(const basic_series& a, const basic_series& b) { return combine(a, b, false); }
    friend basic_series operator-(const basic_series& a, const basic_series& b) { return combine(a, b, true); }

    friend basic_series operator-(basic_series a)
    {
        for (auto& t : a.terms_)
            t.coef = -t.coef;
        return a;
    }

    friend basic_series operator+(basic_series a, const C& c) { return std::move(a) + constant(a.ring_, c, a.bound_); }
    friend basic_series operator+(const C& c, basic_series a) { return std::move(a) + c; }
    friend basic_series operator-(basic_series a, const C& c) { return std::move(a) + C(-c); }
    friend basic_series operator-(const C& c, basic_series a) { return -std::move(a) + c; }

    friend basic_series operator*(basic_series a, const C& c)
    {
        if (c == 0)
            return basic_series(a.ring_, a.bound_);
        for (auto& t : a.terms_)
            t.coef *= c;
        return a;
    }
    friend basic_series operator*(const C& c, basic_series a) { return std::move(a) * c; }

    friend basic_series operator/(basic_series a, const C& c)
    {
        if (c == 0)
            throw non_unit_divisor("division of a series by the zero scalar");
        for (auto& t : a.terms_)
            t.coef /= c;
        return a;
    }

    // Exact product. A coefficient of degree d only needs a up to d - val(b)
    // and b up to d - val(a), so the product is known to
    // min(Ba + val(b), Bb + val(a)).
    friend basic_series operator*(const basic_series& a, const basic_series& b)
    {
        a.require_same_ring(b);
        int bound = std::min(a.bound_ + b.valuation(), b.bound_ + a.valuation());
        if (a.is_zero() || b.is_zero())
            return basic_series(a.ring_, bound);
        return multiply(a, b, bound);
    }

    basic_series& operator+=(const basic_series& b) { return *this = *this + b; }
    basic_series& operator-=(const basic_series& b) { return *this = *this - b; }
    basic_series& operator*=(const basic_series& b) { return *this = *this * b; }

    // Builds a series from arbitrary (possibly repeated, unordered) terms.
    void normalize()
    {
        const ring& r = ring_;
        std::erase_if(terms_, [&](const term& t) { return r.degree(t.mono) > bound_; });
        std::sort(terms_.begin(), terms_.end(), [&](const term& x, const term& y) { return less(r, x.mono, y.mono); });
        std::vector<term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coef += t.coef;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const term& t) { return t.coef == 0; });
        terms_ = std::move(out);
    }

    static bool less(const ring& r, monomial x, monomial y)
    {
        int dx = r.degree(x), dy = r.degree(y);
        return dx != dy ? dx < dy : x.bits() < y.bits();
    }

    // Replaces the bound. Lowering truncates; raising asserts that the
    // coefficients between the old and new bound are zero.
    basic_series with_bound(int bound) const
    {
        basic_series out(ring_, bound);
        for (const auto& t : terms_)
            if (ring_.degree(t.mono) <= bound)
                out.terms_.push_back(t);
        return out;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            if (!first)
                os << " + ";
            first = false;
            os << coefficient_text(t.coef);
            if (t.mono != monomial{})
                os << " * " << ring_.render(t.mono);
        }
        if (first)
            os << "0";
        os << " + O(deg > " << bound_ << ")";
        return os.str();
    }

private:
    auto find(monomial m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [&](const term& t, monomial key) { return less(ring_, t.mono, key); });
        if (it != terms_.end() && it->mono == m)
            return it;
        return terms_.end();
    }

    static std::string coefficient_text(const C& c)
    {
        if constexpr (std::is_same_v<C, mpq_class>) {
            return c.get_str();
        } else {
            std::ostringstream os;
            os << c;
            return os.str();
        }
    }

    static basic_series combine(const basic_series& a, const basic_series& b, bool subtract)
    {
        a.require_same_ring(b);
        basic_series out(a.ring_, std::min(a.bound_, b.bound_));
        const ring& r = a.ring_;
        auto i = a.terms_.begin(), ie = a.terms_.end();
        auto j = b.terms_.begin(), je = b.terms_.end();
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto push = [&](monomial m, C c) {
            if (c != 0 && r.degree(m) <= out.bound_)
                out.terms_.push_back(term{m, std::move(c)});
        };
        while (i != ie || j != je) {
            if (j == je || (i != ie && less(r, i->mono, j->mono))) {
                push(i->mono, i->coef);
                ++i;
            } else if (i == ie || less(r, j->mono, i->mono)) {
                push(j->mono, subtract ? C(-j->coef) : j->coef);
                ++j;
            } else {
                push(i->mono, subtract ? C(i->coef - j->coef) : C(i->coef + j->coef));
                ++i;
                ++j;
            }
        }
        return out;
    }

    static basic_series multiply(const basic_series& a, const basic_series& b, int bound)
    {
        if constexpr (std::is_same_v<C, mpq_class>)
            return multiply_rational(a, b, bound);
        else
            return multiply_generic(a, b, bound);
    }

    static basic_series multiply_generic(const basic_series& a, const basic_series& b, int bound)
    {
        const ring& r = a.ring_;
        std::map<std::uint64_t, C> acc;
        for (const auto& x : a.terms_) {
            int dx = r.degree(x.mono);
            if (dx + b.valuation() > bound)
                break;
            for (const auto& y : b.terms_) {
                if (dx + r.degree(y.mono) > bound)
                    break;
                acc[(x.mono + y.mono).bits()] += x.coef * y.coef;
            }
        }
        basic_series out(r, bound);
        for (auto& [k, c] : acc)
            if (c != 0)
                out.terms_.push_back(term{monomial::from_bits(k), std::move(c)});
        std::sort(out.terms_.begin(), out.terms_.end(), [&](const term& x, const term& y) { return less(r, x.mono, y.mono); });
        return out;
    }

    // Integer convolution over a common denominator into a dense box, so the
    // inner loop is a single mpz_addmul with no gcd work.
    static basic_series multiply_rational(const basic_series& a, const basic_series& b, int bound)
    {
        const ring& r = a.ring_;
        const std::size_t nv = r.size();

        auto scale = [](const basic_series& s, mpz_class& den) {
            den = 1;
            for (const auto& t : s.terms_)
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
            std::vector<mpz_class> nums(s.terms_.size());
            for (std::size_t i = 0; i < s.terms_.size(); ++i) {
                const auto& c = s.terms_[i].coef;
                if (den == 1) {
                    nums[i] = c.get_num();
                } else {
                    mpz_divexact(nums[i].get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
                    nums[i] *= c.get_num();
                }
            }
            return nums;
        };
        mpz_class da, db;
        const auto na = scale(a, da);
        const auto nb = scale(b, db);

        std::array<std::size_t, max_variables> extent{}, stride{};
        std::size_t box = 1;
        for (std::size_t v = 0; v < nv; ++v) {
            std::size_t e = std::size_t{a.max_exponent(v)} + b.max_exponent(v);
            if (r.weight(v) > 0)
                e = std::min<std::size_t>(e, bound < 0 ? 0 : static_cast<std::size_t>(bound / r.weight(v)));
            extent[v] = e + 1;
            stride[v] = box;
            box *= extent[v];
        }
        if (box > (std::size_t{1} << 24))
            return multiply_generic(a, b, bound);

        auto offsets = [&](const basic_series& s) {
            std::vector<std::size_t> off(s.terms_.size());
            std::vector<int> deg(s.terms_.size());
            for (std::size_t i = 0; i < s.terms_.size(); ++i) {
                std::size_t o = 0;
                for (std::size_t v = 0; v < nv; ++v)
                    o += std::size_t{s.terms_[i].mono[v]} * stride[v];
                off[i] = o;
                deg[i] = r.degree(s.terms_[i].mono);
            }
            return std::pair{off, deg};
        };
        const auto [offa, dega] = offsets(a);
        const auto [offb, degb] = offsets(b);

        thread_local std::vector<mpz_class> acc;
        thread_local std::vector<unsigned char> used;
        thread_local std::vector<std::size_t> touched;
        if (acc.size() < box) {
            acc.resize(box);
            used.resize(box, 0);
        }
        touched.clear();

        const int vb = degb.empty() ? bound + 1 : degb.front();
        for (std::size_t i = 0; i < na.size(); ++i) {
            if (dega[i] + vb > bound)
                break;
            const int room = bound - dega[i];
            const mpz_srcptr x = na[i].get_mpz_t();
            for (std::size_t j = 0; j < nb.size(); ++j) {
                if (degb[j] > room)
                    break;
                const std::size_t k = offa[i] + offb[j];
                if (!used[k]) {
                    used[k] = 1;
                    touched.push_back(k);
                }
                mpz_addmul(acc[k].get_mpz_t(), x, nb[j].get_mpz_t());
            }
        }

        const mpz_class den = da * db;
        basic_series out(r, bound);
        out.terms_.reserve(touched.size());
        for (std::size_t k : touched) {
            used[k] = 0;
            if (acc[k] == 0)
                continue;
            monomial m;
            std::size_t rest = k;
            for (std::size_t v = nv; v-- > 0;) {
                m.set(v, static_cast<unsigned>(rest / stride[v]));
                rest %= stride[v];
            }
            mpq_class c(acc[k], den);
            c.canonicalize();
            out.terms_.push_back(term{m, std::move(c)});
            acc[k] = 0;
        }
        std::sort(out.terms_.begin(), out.terms_.end(), [&](const term& x, const term& y) { return less(r, x.mono, y.mono); });
        return out;
    }

    template <class>
    friend class basic_series;

    ring ring_;
    int bound_;
    std::vector<term> terms_;
};

using series = basic_series<coefficient>;

} // namespace quartic
