#ifndef HALFLINE_QUADRATURE_HPP
#define HALFLINE_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "halfline/closed_forms.hpp"
#include "halfline/errors.hpp"

namespace halfline {

using Integrand = std::function<double(double)>;

/// Signed integrals over successive half-periods of an oscillatory
/// integrand; input to the alternating-series acceleration.
struct SeriesTail {
    std::vector<double> terms;
};

inline constexpr std::int64_t kDefaultEvalBudget = 1'000'000;

/// Adaptive quadrature of `f` over the finite interval [a, b] using a
/// Gauss(7)/Kronrod(15) embedded pair with recursive bisection. The returned
/// abs_error_estimate is the sum of per-panel |K15 - G7| differences, which
/// over-covers the true error on smooth integrands.
///
/// Throws BudgetExceededError (carrying the best estimate so far) when the
/// evaluation budget runs out before the tolerance is met, and DomainError
/// if the integrand produces a non-finite value or a >= b.
QuadratureResult adaptive_segment(const Integrand& f, double a, double b,
                                  double tol,
                                  std::int64_t max_evals = kDefaultEvalBudget);

/// Oracle for the damped oscillatory integral with p > 0: integrates
/// x^(n-1) e^(-p x) osc(q x) from 0 to a truncation point whose analytic
/// tail bound is below tol/2. For n < 1 the endpoint singularity is removed
/// exactly by the substitution x = u^(1/n).
QuadratureResult integrate_decaying(const IntegralSpec& spec, double tol);

/// Oracle for the undamped case p = 0 (requires 0 < n < 1, q > 0):
/// partitions [0, inf) at the oscillator zeros k pi / q, integrates each
/// half-period segment adaptively (the first one through the x = u^(1/n)
/// substitution), and accelerates the resulting alternating series.
/// QuadratureResult::segments counts the half-period terms used.
///
/// Throws OracleInconsistencyError if the collected terms stop alternating
/// in sign beyond the third segment.
QuadratureResult integrate_oscillatory_alternating(const IntegralSpec& spec,
                                                   double tol);

/// Oracle for integral of e^(-p x) sin(q x) / x dx on [0, inf), with the
/// integrand extended by continuity to q at x = 0. Truncates for p > 0;
/// half-period partitioning plus acceleration for p = 0.
QuadratureResult integrate_log_sine(double p, double q, double tol);

/// Oracle for integral of x^(m-1) / (1 + x^n) dx on [0, inf). The range is
/// folded onto [0, 1] via x -> 1/x, so no truncation error enters.
QuadratureResult integrate_beta(const BetaSpec& spec, double tol);

/// Accelerated sum of an alternating series via the classical forward-
/// difference (Euler) transformation, processed term by term. Requires at
/// least 3 terms. A finite series padded with zeros is summed exactly.
double euler_transform(const SeriesTail& tail);

namespace detail {

/// Half-period driver shared by the p = 0 integrals: runs
/// `segment(k h, (k+1) h, seg_tol)` for k = 0, 1, ..., collects the signed
/// segment values, enforces the alternating sign pattern beyond the third
/// segment, and returns the accelerated sum. Exposed for testing.
QuadratureResult sum_alternating_segments(
    const std::function<QuadratureResult(double, double, double)>& segment,
    double half_period, double tol);

}  // namespace detail

}  // namespace halfline

#endif
