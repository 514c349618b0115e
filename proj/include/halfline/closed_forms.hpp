#ifndef HALFLINE_CLOSED_FORMS_HPP
#define HALFLINE_CLOSED_FORMS_HPP

#include <string>

namespace halfline {

enum class Oscillator { Cosine, Sine };

/// Parameters of one damped oscillatory integral on [0, inf):
///
///   integral of x^(n-1) e^(-p x) osc(q x) dx
///
/// with order n > 0, decay rate p >= 0 and oscillation rate q >= 0.
/// For p = 0 the integral only converges when 0 < n < 1.
struct IntegralSpec {
    double n = 1.0;
    double p = 1.0;
    double q = 0.0;
    Oscillator oscillator = Oscillator::Cosine;
};

/// Parameters of the rational power integral
///   integral of x^(m-1) / (1 + x^n_exp) dx  on [0, inf),
/// convergent for 0 < m < n_exp.
struct BetaSpec {
    double m = 1.0;
    double n_exp = 2.0;
};

/// Throws DomainError with a specific message if the spec is outside the
/// convergence domain; returns normally otherwise.
void validate(const IntegralSpec& spec);

/// Non-throwing domain predicate (used by grid drivers to skip points).
bool in_domain(const IntegralSpec& spec) noexcept;

/// Closed form Gamma(n) cos(n theta) / f^n of the damped cosine integral,
/// where (f, theta) is the polar decomposition of (p, q). Evaluated in log
/// space so large n does not overflow intermediates.
double damped_cosine_integral(const IntegralSpec& spec);

/// Closed form Gamma(n) sin(n theta) / f^n of the damped sine integral.
double damped_sine_integral(const IntegralSpec& spec);

/// Closed form of integral of e^(-p x) sin(q x) / x dx on [0, inf): the
/// angle arctan(q/p), with p = 0 giving exactly pi/2. Requires q > 0, p >= 0.
double log_sine_integral(double p, double q);

struct FresnelValues {
    double sine_value = 0.0;
    double cosine_value = 0.0;
};

/// Order-1/2 specialization: values of integral of x^(-1/2) e^(-p x) sin(q x)
/// and the cosine analogue, via the half-angle form
///   (sqrt(pi)/f) sqrt((f -+ p)/2).
FresnelValues fresnel_general(double p, double q);

/// Closed form pi / (n sin(m pi / n)) of the rational power integral.
double beta_reciprocal(const BetaSpec& spec);

const char* to_string(Oscillator osc) noexcept;

}  // namespace halfline

#endif
