#pragma once

// Inverse problems. Given a constant target sum S, classify the level set
// { X : sum_k d_k^(2m) = S } as a circle, a point, or the empty set, and
// recover the circle radius by inverting the closed form. The general
// weighted classifier handles sum_i lambda_i d^2(X, P_i) = S for arbitrary
// points and weights, where the case split on sum lambda_i yields the
// circle/point/empty family or the line/whole-plane/empty family.

#include <array>
#include <cmath>
#include <vector>

#include "locuskit/errors.hpp"
#include "locuskit/numeric.hpp"
#include "locuskit/polygon.hpp"
#include "locuskit/power_sums.hpp"
#include "locuskit/tolerances.hpp"

namespace locuskit {

enum class LocusKind { Circle, Point, Empty, Line, WholePlane };

struct LocusResult {
  LocusKind kind = LocusKind::Empty;
  double circle_radius = 0.0;               // valid iff kind == Circle
  PlanarPoint circle_center{};              // valid iff kind in {Circle, Point}
  std::array<double, 3> line_coeffs{};      // a x + b y + c = 0, iff kind == Line

  static LocusResult circle(PlanarPoint center, double radius) {
    LocusResult r;
    r.kind = LocusKind::Circle;
    r.circle_center = center;
    r.circle_radius = radius;
    return r;
  }
  static LocusResult point(PlanarPoint center) {
    LocusResult r;
    r.kind = LocusKind::Point;
    r.circle_center = center;
    return r;
  }
  static LocusResult empty() { return LocusResult{}; }
  static LocusResult line(double a, double b, double c) {
    LocusResult r;
    r.kind = LocusKind::Line;
    r.line_coeffs = {a, b, c};
    return r;
  }
  static LocusResult whole_plane() {
    LocusResult r;
    r.kind = LocusKind::WholePlane;
    return r;
  }
};

// The unique ell > 0 with power_sum_closed(spec, r, ell) = target_sum.
// Bracketed bisection on u = ell^2: the closed form gives S/n >= A^m >= u^m,
// so u <= (S/n)^(1/m) brackets from above, and strict monotonicity in ell
// guarantees the root is unique.
inline double solve_radius(const PowerSumSpec& spec, double r,
                           double target_sum,
                           double rel_tol_u = tol::kBisectionRelU,
                           int* iterations_out = nullptr) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("solve_radius: r must be positive and finite");
  }
  if (!std::isfinite(target_sum)) {
    throw DomainError("solve_radius: target sum must be finite");
  }
  if (!spec.circle_theorem_applies()) {
    throw DomainError("solve_radius: requires m <= n-1",
                      ErrorCode::DomainMGeN);
  }
  const double center_sum = spec.n * int_pow(r * r, spec.m);
  if (!(target_sum > center_sum)) {
    throw NoRootError("solve_radius: target sum does not exceed n*r^(2m)");
  }
  double lo = 0.0;
  double hi = std::pow(target_sum / spec.n, 1.0 / spec.m);
  while (power_sum_closed(spec, r, std::sqrt(hi)) < target_sum) {
    hi *= 2.0;
  }
  int iterations = 0;
  while (hi - lo > rel_tol_u * hi && iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (power_sum_closed(spec, r, std::sqrt(mid)) < target_sum) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  if (iterations_out != nullptr) *iterations_out = iterations;
  return std::sqrt(0.5 * (lo + hi));
}

// Trichotomy against n * r^(2m) with a relative band absorbing input
// rounding; the circle branch recovers the radius by inversion. The center
// is always the polygon center (the origin in this frame).
inline LocusResult classify_power_locus(const PowerSumSpec& spec, double r,
                                        double target_sum,
                                        double band_rel = tol::kPointBandRel) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("classify_power_locus: r must be positive and finite");
  }
  if (!std::isfinite(target_sum)) {
    throw DomainError("classify_power_locus: target sum must be finite");
  }
  if (!spec.circle_theorem_applies()) {
    throw DomainError("classify_power_locus: requires m <= n-1",
                      ErrorCode::DomainMGeN);
  }
  const double center_sum = spec.n * int_pow(r * r, spec.m);
  if (std::abs(target_sum - center_sum) <= band_rel * center_sum) {
    return LocusResult::point({0.0, 0.0});
  }
  if (target_sum < center_sum) {
    return LocusResult::empty();
  }
  return LocusResult::circle({0.0, 0.0}, solve_radius(spec, r, target_sum));
}

struct WeightedPointSet {
  std::vector<PlanarPoint> points;
  std::vector<double> weights;
  double target = 0.0;  // S
};

namespace detail {
inline void validate(const WeightedPointSet& wps) {
  if (wps.points.empty() || wps.points.size() != wps.weights.size()) {
    throw DomainError(
        "WeightedPointSet: points and weights must be nonempty and of equal "
        "length");
  }
  for (const PlanarPoint& p : wps.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw DomainError("WeightedPointSet: point coordinates must be finite");
    }
  }
  for (double w : wps.weights) {
    if (!std::isfinite(w)) {
      throw DomainError("WeightedPointSet: weights must be finite");
    }
  }
  if (!std::isfinite(wps.target)) {
    throw DomainError("WeightedPointSet: target sum must be finite");
  }
}
}  // namespace detail

// General quadratic locus of sum_i lambda_i d^2(X, P_i) = S.
//
// With L = sum lambda_i != 0 the equation is a circle equation around the
// weighted center of mass c = (sum lambda_i P_i) / L with
// rho^2 = (S - sum lambda_i |P_i|^2) / L + |c|^2; the sign of rho^2 decides
// circle / point / empty. With L = 0 the quadratic part cancels and
// 2 (sum lambda_i a_i) x + 2 (sum lambda_i b_i) y = sum lambda_i |P_i|^2 - S
// remains: a line when the gradient is nonzero, the whole plane when both
// gradient and residual vanish, the empty set otherwise.
inline LocusResult classify_weighted_locus(const WeightedPointSet& wps,
                                           double eps = tol::kWeightedEps) {
  detail::validate(wps);
  const std::size_t count = wps.points.size();
  double lambda_sum = 0.0;
  double abs_lambda_sum = 0.0;
  double sx = 0.0;      // sum lambda_i a_i
  double sy = 0.0;      // sum lambda_i b_i
  double sq = 0.0;      // sum lambda_i (a_i^2 + b_i^2)
  double abs_sq = 0.0;  // sum |lambda_i| (a_i^2 + b_i^2)
  double grad_scale = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double w = wps.weights[i];
    const double x = wps.points[i].x;
    const double y = wps.points[i].y;
    lambda_sum += w;
    abs_lambda_sum += std::abs(w);
    sx += w * x;
    sy += w * y;
    sq += w * (x * x + y * y);
    abs_sq += std::abs(w) * (x * x + y * y);
    grad_scale += std::abs(w) * (std::abs(x) + std::abs(y));
  }
  const double scale = std::max({1.0, abs_sq, std::abs(wps.target)});

  if (std::abs(lambda_sum) > 1e-12 * abs_lambda_sum) {
    const PlanarPoint center{sx / lambda_sum, sy / lambda_sum};
    const double rho2 = (wps.target - sq) / lambda_sum +
                        center.x * center.x + center.y * center.y;
    const double threshold = eps * scale / std::abs(lambda_sum);
    if (rho2 > threshold) {
      return LocusResult::circle(center, std::sqrt(rho2));
    }
    if (rho2 < -threshold) {
      return LocusResult::empty();
    }
    return LocusResult::point(center);
  }

  const double a = 2.0 * sx;
  const double b = 2.0 * sy;
  const double c = wps.target - sq;  // a x + b y + c = 0
  if (std::hypot(a, b) > eps * std::max(1.0, 2.0 * grad_scale)) {
    return LocusResult::line(a, b, c);
  }
  if (std::abs(c) <= eps * scale) {
    return LocusResult::whole_plane();
  }
  return LocusResult::empty();
}

// Directly evaluates sum_i lambda_i d^2(X, P_i); the membership oracle for
// weighted classifications.
inline double weighted_square_sum(const WeightedPointSet& wps,
                                  const PlanarPoint& probe) {
  detail::validate(wps);
  double sum = 0.0;
  for (std::size_t i = 0; i < wps.points.size(); ++i) {
    const double dx = probe.x - wps.points[i].x;
    const double dy = probe.y - wps.points[i].y;
    sum += wps.weights[i] * (dx * dx + dy * dy);
  }
  return sum;
}

}  // namespace locuskit
