#include "halfline/closed_forms.hpp"

#include <cmath>
#include <string>

#include "halfline/errors.hpp"
#include "halfline/gamma.hpp"
#include "halfline/polar.hpp"

namespace halfline {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kMaxExpArg = 709.0;  // exp() overflows beyond this

std::string describe(const IntegralSpec& spec) {
    return "(n = " + std::to_string(spec.n) + ", p = " + std::to_string(spec.p) +
           ", q = " + std::to_string(spec.q) + ", " + to_string(spec.oscillator) +
           ")";
}

// Gamma(n) trig(n theta) / f^n, composed in log space.
double closed_form_value(const IntegralSpec& spec) {
    validate(spec);
    const PolarDecomposition d = to_polar(spec.p, spec.q);
    const double trig = spec.oscillator == Oscillator::Cosine
                            ? std::cos(spec.n * d.angle)
                            : std::sin(spec.n * d.angle);
    const double log_magnitude =
        log_gamma(spec.n) - spec.n * std::log(d.modulus);
    if (log_magnitude > kMaxExpArg) {
        throw DomainError("closed form overflows double precision for " +
                          describe(spec));
    }
    return std::exp(log_magnitude) * trig;
}

}  // namespace

const char* to_string(Oscillator osc) noexcept {
    return osc == Oscillator::Cosine ? "cos" : "sin";
}

void validate(const IntegralSpec& spec) {
    if (!std::isfinite(spec.n) || !std::isfinite(spec.p) ||
        !std::isfinite(spec.q)) {
        throw DomainError("integral spec: parameters must be finite");
    }
    if (spec.n <= 0.0) {
        if (spec.n == 0.0 && spec.p == 0.0 &&
            spec.oscillator == Oscillator::Cosine) {
            throw DomainError(
                "integral spec: logarithmically divergent at n = 0 with "
                "p = 0 for the cosine kernel");
        }
        throw DomainError("integral spec: divergent for n <= 0, got n = " +
                          std::to_string(spec.n));
    }
    if (spec.p < 0.0) {
        throw DomainError(
            "integral spec: negative decay rate p = " + std::to_string(spec.p) +
            " is outside the convergence domain");
    }
    if (spec.q < 0.0) {
        throw DomainError("integral spec: negative oscillation rate q = " +
                          std::to_string(spec.q));
    }
    if (spec.p == 0.0 && spec.q == 0.0) {
        throw DomainError("integral spec: p = q = 0 is degenerate");
    }
    if (spec.p == 0.0 && spec.n >= 1.0) {
        throw DomainError(
            "integral spec: with p = 0 the integral converges only for "
            "0 < n < 1, got n = " +
            std::to_string(spec.n));
    }
}

bool in_domain(const IntegralSpec& spec) noexcept {
    try {
        validate(spec);
    } catch (const DomainError&) {
        return false;
    }
    return true;
}

double damped_cosine_integral(const IntegralSpec& spec) {
    IntegralSpec s = spec;
    s.oscillator = Oscillator::Cosine;
    return closed_form_value(s);
}

double damped_sine_integral(const IntegralSpec& spec) {
    IntegralSpec s = spec;
    s.oscillator = Oscillator::Sine;
    return closed_form_value(s);
}

double log_sine_integral(double p, double q) {
    if (!std::isfinite(p) || !std::isfinite(q)) {
        throw DomainError("log_sine_integral: p and q must be finite");
    }
    if (q <= 0.0) {
        throw DomainError("log_sine_integral: q must be positive, got q = " +
                          std::to_string(q));
    }
    if (p < 0.0) {
        throw DomainError("log_sine_integral: negative decay rate p = " +
                          std::to_string(p));
    }
    return std::atan2(q, p);
}

FresnelValues fresnel_general(double p, double q) {
    if (!std::isfinite(p) || !std::isfinite(q)) {
        throw DomainError("fresnel_general: p and q must be finite");
    }
    if (p < 0.0) {
        throw DomainError("fresnel_general: negative decay rate p = " +
                          std::to_string(p));
    }
    if (q < 0.0) {
        throw DomainError("fresnel_general: negative oscillation rate q = " +
                          std::to_string(q));
    }
    if (p == 0.0 && q == 0.0) {
        throw DomainError("fresnel_general: p = q = 0 is degenerate");
    }
    const PolarDecomposition d = to_polar(p, q);
    const HalfAngle h = half_angle(d, p);
    const double scale = std::sqrt(kPi) / std::sqrt(d.modulus);
    return {scale * h.sin_half, scale * h.cos_half};
}

double beta_reciprocal(const BetaSpec& spec) {
    if (!std::isfinite(spec.m) || !std::isfinite(spec.n_exp)) {
        throw DomainError("beta_reciprocal: parameters must be finite");
    }
    if (spec.m <= 0.0 || spec.m >= spec.n_exp) {
        throw DomainError(
            "beta_reciprocal: divergent unless 0 < m < n, got m = " +
            std::to_string(spec.m) + ", n = " + std::to_string(spec.n_exp));
    }
    return kPi / (spec.n_exp * std::sin(spec.m * kPi / spec.n_exp));
}

}  // namespace halfline
