#ifndef HALFLINE_CLOTHOID_HPP
#define HALFLINE_CLOTHOID_HPP

#include <vector>

namespace halfline {

/// Scale of the spiral r s = 2 c^2 (osculating radius times arc length
/// constant). Must be positive.
struct ClothoidParams {
    double scale = 1.0;  // the length scale c
};

/// One point of the spiral, parametrized by the tangent amplitude phi:
///   s = 2 c sqrt(phi),  r = c / sqrt(phi),
///   x = c * int_0^phi cos(t)/sqrt(t) dt,  y = the sine analogue.
/// r is +infinity at phi = 0 (the curve starts straight).
struct ClothoidPoint {
    double phi = 0.0;
    double s = 0.0;
    double x = 0.0;
    double y = 0.0;
    double r = 0.0;
};

struct PolePoint {
    double x = 0.0;
    double y = 0.0;
};

/// Evaluates the spiral at amplitude phi >= 0. The coordinate integrals are
/// computed through the substitution t = u^2 (x = 2c int_0^sqrt(phi)
/// cos(u^2) du), which removes the 1/sqrt(t) singularity exactly.
ClothoidPoint point_at(const ClothoidParams& params, double phi);

/// Limit point of the spiral: (c sqrt(pi/2), c sqrt(pi/2)), in closed form.
PolePoint pole(const ClothoidParams& params);

/// count >= 2 points with phi spaced uniformly in sqrt(phi) (uniform in arc
/// length), from phi = 0 to phi = phi_max inclusive.
std::vector<ClothoidPoint> sample_polyline(const ClothoidParams& params,
                                           double phi_max, int count);

}  // namespace halfline

#endif
