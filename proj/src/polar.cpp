#include "halfline/polar.hpp"

#include <cmath>
#include <string>

#include "halfline/errors.hpp"

namespace halfline {

PolarDecomposition to_polar(double p, double q) {
    if (!std::isfinite(p) || !std::isfinite(q)) {
        throw DomainError("to_polar: p and q must be finite");
    }
    if (p < 0.0) {
        throw DomainError("to_polar: negative decay rate p = " +
                          std::to_string(p) +
                          " is outside the convergence domain");
    }
    if (q < 0.0) {
        throw DomainError("to_polar: negative oscillation rate q = " +
                          std::to_string(q));
    }
    if (p == 0.0 && q == 0.0) {
        throw DomainError("to_polar: p = q = 0 is degenerate, the angle is "
                          "undefined");
    }
    // hypot avoids overflow for large p, q; atan2 pins p = 0 to exactly pi/2.
    return {std::hypot(p, q), std::atan2(q, p)};
}

HalfAngle half_angle(const PolarDecomposition& d, double p) {
    const double f = d.modulus;
    if (!(f > 0.0)) {
        throw DomainError("half_angle: modulus must be positive");
    }
    if (p < 0.0 || p > f) {
        throw DomainError("half_angle: p = " + std::to_string(p) +
                          " is inconsistent with modulus f = " +
                          std::to_string(f) + " (need 0 <= p <= f)");
    }
    return {std::sqrt((f - p) / (2.0 * f)), std::sqrt((f + p) / (2.0 * f))};
}

}  // namespace halfline
