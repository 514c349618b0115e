#include "halfline/clothoid.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "halfline/errors.hpp"
#include "halfline/quadrature.hpp"

namespace halfline {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kCoordinateTol = 1e-10;

void require_params(const ClothoidParams& params) {
    if (!(params.scale > 0.0) || !std::isfinite(params.scale)) {
        throw DomainError("clothoid: scale c must be positive and finite");
    }
}

}  // namespace

ClothoidPoint point_at(const ClothoidParams& params, double phi) {
    require_params(params);
    if (!(phi >= 0.0) || !std::isfinite(phi)) {
        throw DomainError("clothoid: amplitude phi must be >= 0, got " +
                          std::to_string(phi));
    }
    const double c = params.scale;
    ClothoidPoint pt;
    pt.phi = phi;
    if (phi == 0.0) {
        pt.r = std::numeric_limits<double>::infinity();
        return pt;
    }
    const double root = std::sqrt(phi);
    pt.s = 2.0 * c * root;
    pt.r = c / root;
    pt.x = 2.0 * c *
           adaptive_segment([](double u) { return std::cos(u * u); }, 0.0,
                            root, kCoordinateTol)
               .value;
    pt.y = 2.0 * c *
           adaptive_segment([](double u) { return std::sin(u * u); }, 0.0,
                            root, kCoordinateTol)
               .value;
    return pt;
}

PolePoint pole(const ClothoidParams& params) {
    require_params(params);
    const double coord = params.scale * std::sqrt(kPi / 2.0);
    return {coord, coord};
}

std::vector<ClothoidPoint> sample_polyline(const ClothoidParams& params,
                                           double phi_max, int count) {
    require_params(params);
    if (!(phi_max > 0.0) || !std::isfinite(phi_max)) {
        throw DomainError("clothoid: phi_max must be positive, got " +
                          std::to_string(phi_max));
    }
    if (count < 2) {
        throw DomainError("clothoid: need at least 2 sample points, got " +
                          std::to_string(count));
    }
    const double root_max = std::sqrt(phi_max);
    std::vector<ClothoidPoint> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        double phi;
        if (j == 0) {
            phi = 0.0;
        } else if (j == count - 1) {
            phi = phi_max;  // exact endpoint, no rounding from the sqrt grid
        } else {
            const double root = root_max * j / (count - 1);
            phi = root * root;
        }
        points.push_back(point_at(params, phi));
    }
    return points;
}

}  // namespace halfline
