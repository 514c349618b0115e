#ifndef HALFLINE_POLAR_HPP
#define HALFLINE_POLAR_HPP

namespace halfline {

/// Modulus-angle form of a first-quadrant pair (p, q):
/// modulus = sqrt(p^2 + q^2), angle = arctan(q/p) in [0, pi/2].
struct PolarDecomposition {
    double modulus = 0.0;
    double angle = 0.0;
};

struct HalfAngle {
    double sin_half = 0.0;
    double cos_half = 0.0;
};

/// Decomposes (p, q) with p >= 0, q >= 0, not both zero. p = 0 yields an
/// angle of exactly pi/2. Throws DomainError on negative inputs or the
/// degenerate origin.
PolarDecomposition to_polar(double p, double q);

/// Half-angle values (sin(theta/2), cos(theta/2)) computed algebraically as
/// sqrt((f -+ p) / (2 f)). Requires 0 <= p <= d.modulus and d.modulus > 0.
HalfAngle half_angle(const PolarDecomposition& d, double p);

}  // namespace halfline

#endif
