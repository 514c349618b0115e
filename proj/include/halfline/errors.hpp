#ifndef HALFLINE_ERRORS_HPP
#define HALFLINE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace halfline {

/// Inputs outside a routine's mathematical domain (divergent integrals,
/// negative decay rates, degenerate parameter pairs, overflow guards).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t function_evals = 0;
    std::int64_t segments = 0;
};

/// Thrown when an integrator runs out of its evaluation budget before the
/// requested tolerance is met. Carries the best estimate reached so far.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& msg, QuadratureResult best)
        : std::runtime_error(msg), best_(best) {}

    const QuadratureResult& best_result() const noexcept { return best_; }

private:
    QuadratureResult best_;
};

/// Thrown when the half-period series of an oscillatory integral stops
/// alternating in sign, which signals a broken premise rather than a
/// tolerance problem.
class OracleInconsistencyError : public std::runtime_error {
public:
    explicit OracleInconsistencyError(const std::string& msg)
        : std::runtime_error(msg) {}
};

}  // namespace halfline

#endif
