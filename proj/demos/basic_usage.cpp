// Walks through the library surface: evaluate a power sum both ways, invert
// it back to the radius, classify loci, and inspect the angular behavior
// past the closed form's range.

#include <cstdio>

#include "locuskit/locuskit.hpp"

int main() {
  using namespace locuskit;

  const RegularPolygon pentagon(5, 1.0);
  const PowerSumSpec spec(5, 4);  // eighth powers of the distances

  const double closed = power_sum_closed(spec, pentagon.r, 1.0);
  const double direct =
      power_sum_direct(pentagon, ProbePoint(1.0, 0.37), spec.m);
  std::printf("S = %.17g (closed form), %.17g (direct sum)\n", closed, direct);

  const double ell = solve_radius(spec, pentagon.r, closed);
  std::printf("radius recovered from S: %.17g\n", ell);

  const LocusResult locus = classify_power_locus(spec, pentagon.r, closed);
  std::printf("locus kind: %d, radius %.17g\n", static_cast<int>(locus.kind),
              locus.circle_radius);

  // tenth powers (m = n = 5): the sum picks up a cos(5 alpha) term and the
  // level sets stop being circles
  const AlphaScanReport scan = alpha_scan(pentagon, 1.0, 5, 256);
  std::printf("m = 5 scan: min %.17g, max %.17g, relative amplitude %.3g\n",
              scan.s_min, scan.s_max, scan.relative_amplitude);

  // the same trichotomy for arbitrary weighted points
  const LocusResult weighted = classify_weighted_locus(
      {{{0.0, 0.0}, {2.0, 0.0}}, {1.0, 1.0}, 4.0});
  std::printf("weighted locus: circle of radius %.17g around (%g, %g)\n",
              weighted.circle_radius, weighted.circle_center.x,
              weighted.circle_center.y);
  return 0;
}
