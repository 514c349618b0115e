#include "halfline/gamma.hpp"

#include <array>
#include <cmath>
#include <string>

#include "halfline/errors.hpp"

namespace halfline {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLnSqrt2Pi = 0.918938533204672741780329736405617639;

// Lanczos coefficients, g = 7, truncated at 1/(x+8). This is the classical
// double-precision set; relative error of the rational part is ~1e-15 for
// x >= 0.5.
constexpr std::array<double, 9> kLanczos7 = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

// (k)! for k = 0..170; each step is a single double multiply, so entries stay
// within one rounding of the exact integer.
constexpr std::array<double, 171> make_factorials() {
    std::array<double, 171> f{};
    f[0] = 1.0;
    for (int k = 1; k <= 170; ++k) f[k] = f[k - 1] * static_cast<double>(k);
    return f;
}
constexpr std::array<double, 171> kFactorial = make_factorials();

// ln Gamma(x) for x >= 0.5 via Lanczos.
double log_gamma_lanczos(double x) {
    const double z = x - 1.0;
    double rational = kLanczos7[0];
    for (int k = 1; k <= 8; ++k) rational += kLanczos7[k] / (z + k);
    const double base = z + 7.5;
    return (z + 0.5) * std::log(base) - base + kLnSqrt2Pi + std::log(rational);
}

void require_positive(double n, const char* who) {
    if (std::isnan(n) || n <= 0.0) {
        throw DomainError(std::string(who) +
                          ": order must be positive, got n = " +
                          std::to_string(n) +
                          " (the defining integral diverges for n <= 0)");
    }
}

}  // namespace

double gamma(double n) {
    require_positive(n, "gamma");
    if (n > kGammaMaxArgument) {
        throw DomainError("gamma: n = " + std::to_string(n) +
                          " exceeds 170; the value overflows double "
                          "precision, use log_gamma");
    }
    if (n == std::floor(n)) {
        return kFactorial[static_cast<int>(n) - 1];
    }
    if (n < 0.5) {
        // Reflection: Gamma(n) Gamma(1-n) = pi / sin(pi n), with 1 - n >= 0.5.
        const double value =
            kPi / (std::sin(kPi * n) * std::exp(log_gamma_lanczos(1.0 - n)));
        if (!std::isfinite(value)) {
            throw DomainError("gamma: value overflows double precision for "
                              "n = " + std::to_string(n) +
                              ", use log_gamma");
        }
        return value;
    }
    return std::exp(log_gamma_lanczos(n));
}

double log_gamma(double n) {
    require_positive(n, "log_gamma");
    if (n >= 0.5) return log_gamma_lanczos(n);
    return std::log(kPi / std::sin(kPi * n)) - log_gamma_lanczos(1.0 - n);
}

}  // namespace halfline
