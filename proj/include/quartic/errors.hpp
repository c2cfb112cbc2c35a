#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace quartic {

// Base class for every failure raised by the series algebra and the solvers.
class series_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class incompatible_rings : public series_error {
public:
    using series_error::series_error;
};

// Division by a series whose constant term vanishes (or whose weight-0 part
// is not a constant).
class non_unit_divisor : public series_error {
public:
    using series_error::series_error;
};

// A term of the dividend is not divisible by the requested monomial.
class inexact_division : public series_error {
public:
    inexact_division(const std::string& what, std::string monomial)
        : series_error(monomial.empty() ? what : what + " (term " + monomial + ")"), monomial_(std::move(monomial)) {}

    const std::string& monomial() const noexcept { return monomial_; }

private:
    std::string monomial_;
};

// Substitution of a series that is not of positive order.
class non_nilpotent_argument : public series_error {
public:
    using series_error::series_error;
};

// Fixed-point iterates stopped gaining order before reaching the bound.
class stagnation : public series_error {
public:
    using series_error::series_error;
};

// Iteration budget exhausted without reaching a fixed point.
class non_convergence : public series_error {
public:
    using series_error::series_error;
};

// A computation delivered fewer correct degrees than were requested.
class precision_loss : public series_error {
public:
    using series_error::series_error;
};

// A count that must be an integer (or non-negative) is not.
class non_integral_count : public series_error {
public:
    using series_error::series_error;
};

// Wraps a failure with the pipeline stage and equation it came from.
class stage_error : public std::runtime_error {
public:
    stage_error(std::string stage, const std::string& cause)
        : std::runtime_error(stage + ": " + cause), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

// Runs f and re-throws any series_error as a stage_error naming `stage`.
template <class F>
decltype(auto) in_stage(const std::string& stage, F&& f)
{
    try {
        return std::forward<F>(f)();
    } catch (const stage_error& e) {
        throw stage_error(stage + " / " + e.stage(), e.what());
    } catch (const series_error& e) {
        throw stage_error(stage, e.what());
    }
}

} // namespace quartic
