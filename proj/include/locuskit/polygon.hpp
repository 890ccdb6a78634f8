#pragma once

// Geometry primitives: the fixed regular n-gon, polar probe points, and
// squared vertex distances via the law of cosines. Vertex 1 sits at angle 0
// and vertices advance counterclockwise by 2*pi/n.

#include <cmath>
#include <numbers>

#include "locuskit/errors.hpp"

namespace locuskit {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
};

struct RegularPolygon {
  int n;     // vertex count, n >= 3
  double r;  // circumradius, r > 0 and finite

  RegularPolygon(int n_, double r_) : n(n_), r(r_) {
    if (n < 3) {
      throw DomainError("RegularPolygon: vertex count must be >= 3");
    }
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw DomainError("RegularPolygon: circumradius must be positive and finite");
    }
  }
};

struct ProbePoint {
  double ell;    // distance from the polygon center, ell >= 0 and finite
  double alpha;  // angular position in radians, any finite real

  ProbePoint(double ell_, double alpha_) : ell(ell_), alpha(alpha_) {
    if (!(ell >= 0.0) || !std::isfinite(ell)) {
      throw DomainError("ProbePoint: ell must be nonnegative and finite");
    }
    if (!std::isfinite(alpha)) {
      throw DomainError("ProbePoint: alpha must be finite");
    }
  }

  PlanarPoint cartesian() const {
    return {ell * std::cos(alpha), ell * std::sin(alpha)};
  }
};

// Angle of vertex k (1-based): (k-1) * 2*pi/n.
inline double vertex_angle(const RegularPolygon& poly, int k) {
  if (k < 1 || k > poly.n) {
    throw DomainError("vertex_angle: vertex index out of range");
  }
  return (k - 1) * (2.0 * std::numbers::pi / poly.n);
}

inline PlanarPoint vertex_position(const RegularPolygon& poly, int k) {
  const double theta = vertex_angle(poly, k);
  return {poly.r * std::cos(theta), poly.r * std::sin(theta)};
}

// r^2 + ell^2 - 2 r ell cos(alpha - theta_k). The exact value is bounded
// below by (r - ell)^2 >= 0; any computed negative is rounding and is
// clamped to 0 so that even powers stay well defined.
inline double squared_distance(const RegularPolygon& poly, int k,
                               const ProbePoint& p) {
  const double d2 = poly.r * poly.r + p.ell * p.ell -
                    2.0 * poly.r * p.ell *
                        std::cos(p.alpha - vertex_angle(poly, k));
  return d2 < 0.0 ? 0.0 : d2;
}

}  // namespace locuskit
