#ifndef HALFLINE_GAMMA_HPP
#define HALFLINE_GAMMA_HPP

namespace halfline {

/// Gamma function for real n > 0.
///
/// Integer arguments take an exact factorial table, so gamma(n) == (n-1)!
/// up to double rounding. Non-integer arguments use a Lanczos approximation
/// (g = 7, 9 coefficients) with relative accuracy well below 1e-12 on
/// (0, 50], plus the reflection formula for n < 1/2.
///
/// Throws DomainError for n <= 0 (the integral defining the value diverges)
/// and for n > 170 (the result overflows doubles; use log_gamma instead).
double gamma(double n);

/// Natural log of gamma(n) for n > 0. Absolute accuracy <= 1e-12 on (0, 100];
/// no upper cutoff. Throws DomainError for n <= 0.
double log_gamma(double n);

/// Largest argument gamma() accepts before the result overflows a double.
inline constexpr double kGammaMaxArgument = 170.0;

}  // namespace halfline

#endif
