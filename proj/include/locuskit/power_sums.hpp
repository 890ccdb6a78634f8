#pragma once

// The two engines for S = sum_k d_k^(2m), the sum of (2m)-th powers of the
// distances from a probe point to the vertices of a regular n-gon:
//
//   power_sum_direct: brute-force summation over the vertices; works for
//                     every m and serves as the oracle;
//   power_sum_closed: the alpha-free closed form
//                       n [ A^m + sum_k C(m,2k) A^(m-2k) (r ell)^(2k) C(2k,k) ],
//                       A = r^2 + ell^2, valid for m <= n-1.
//
// alpha_scan quantifies the angular dependence of the direct sum over one
// symmetry period, which is how the m >= n regime is explored.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "locuskit/errors.hpp"
#include "locuskit/numeric.hpp"
#include "locuskit/polygon.hpp"

namespace locuskit {

struct PowerSumSpec {
  int n;  // vertex count, n >= 3
  int m;  // half-power: the distance power is 2m

  PowerSumSpec(int n_, int m_) : n(n_), m(m_) {
    if (n < 3) throw DomainError("PowerSumSpec: vertex count must be >= 3");
    if (m < 1) throw DomainError("PowerSumSpec: half-power must be >= 1");
  }

  // The circle theorem covers m = 1 .. n-1.
  bool circle_theorem_applies() const { return m <= n - 1; }
};

/// One term of the closed form: coefficient C(m,2k) * C(2k,k), exact.
struct ClosedFormTerm {
  int k;
  Uint128 coeff;

  double coeff_as_double() const { return static_cast<double>(coeff); }
};

// Exact coefficients for k = 1 .. floor(m/2); empty for m = 1. Throws
// OverflowError past the 128-bit width (guaranteed exact for m <= 64).
inline std::vector<ClosedFormTerm> closed_form_terms(int m) {
  if (m < 1) throw DomainError("closed_form_terms: m must be >= 1");
  std::vector<ClosedFormTerm> terms;
  terms.reserve(m / 2);
  for (int k = 1; k <= m / 2; ++k) {
    terms.push_back({k, checked_mul(binomial(m, 2 * k), binomial(2 * k, k))});
  }
  return terms;
}

// Literal sum over the vertices; valid for every m >= 1.
inline double power_sum_direct(const RegularPolygon& poly, const ProbePoint& p,
                               int m) {
  if (m < 1) throw DomainError("power_sum_direct: m must be >= 1");
  double sum = 0.0;
  for (int k = 1; k <= poly.n; ++k) {
    sum += int_pow(squared_distance(poly, k, p), m);
  }
  return sum;
}

// Closed-form evaluation. For numerical stability the term sum is folded
// into a Horner recurrence in t = (r ell / A)^2, which lies in [0, 1/4].
inline double power_sum_closed(const PowerSumSpec& spec, double r,
                               double ell) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("power_sum_closed: r must be positive and finite");
  }
  if (!(ell >= 0.0) || !std::isfinite(ell)) {
    throw DomainError("power_sum_closed: ell must be nonnegative and finite");
  }
  if (!spec.circle_theorem_applies()) {
    throw DomainError(
        "power_sum_closed: closed form requires m <= n-1; "
        "use power_sum_direct or alpha_scan",
        ErrorCode::DomainMGeN);
  }
  const std::vector<ClosedFormTerm> terms = closed_form_terms(spec.m);
  const double a = r * r + ell * ell;
  const double rl = r * ell;
  if (a > 0.0 && std::isfinite(a)) {
    const double t = (rl / a) * (rl / a);
    double tail = 0.0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      tail = (tail + it->coeff_as_double()) * t;
    }
    return spec.n * int_pow(a, spec.m) * (1.0 + tail);
  }
  // A underflowed to 0 (possible only for subnormal r, ell): plain term sum.
  double sum = int_pow(a, spec.m);
  for (const ClosedFormTerm& term : terms) {
    sum += term.coeff_as_double() * int_pow(a, spec.m - 2 * term.k) *
           int_pow(rl, 2 * term.k);
  }
  return spec.n * sum;
}

struct AlphaSample {
  double alpha;
  double sum;
};

struct AlphaScanReport {
  int n = 0;
  int m = 0;
  double r = 0.0;
  double ell = 0.0;
  int samples = 0;
  double s_min = 0.0;
  double s_max = 0.0;
  double amplitude = 0.0;           // s_max - s_min
  double relative_amplitude = 0.0;  // amplitude / s_min
};

// Evenly spaced grid over one symmetry period [0, 2pi/n); the sum is
// invariant under alpha -> alpha + 2pi/n by vertex relabeling, so one
// period captures the full angular behavior.
inline std::vector<AlphaSample> alpha_scan_samples(const RegularPolygon& poly,
                                                   double ell, int m,
                                                   int samples) {
  if (samples < 8) throw DomainError("alpha_scan: samples must be >= 8");
  if (!(ell > 0.0) || !std::isfinite(ell)) {
    throw DomainError("alpha_scan: ell must be positive and finite");
  }
  if (m < 1) throw DomainError("alpha_scan: m must be >= 1");
  const double period = 2.0 * std::numbers::pi / poly.n;
  std::vector<AlphaSample> grid;
  grid.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double alpha = period * i / samples;
    grid.push_back({alpha, power_sum_direct(poly, ProbePoint(ell, alpha), m)});
  }
  return grid;
}

inline AlphaScanReport alpha_scan(const RegularPolygon& poly, double ell,
                                  int m, int samples) {
  const std::vector<AlphaSample> grid =
      alpha_scan_samples(poly, ell, m, samples);
  AlphaScanReport report;
  report.n = poly.n;
  report.m = m;
  report.r = poly.r;
  report.ell = ell;
  report.samples = samples;
  const auto [lo, hi] =
      std::minmax_element(grid.begin(), grid.end(),
                          [](const AlphaSample& a, const AlphaSample& b) {
                            return a.sum < b.sum;
                          });
  report.s_min = lo->sum;
  report.s_max = hi->sum;
  report.amplitude = report.s_max - report.s_min;
  report.relative_amplitude =
      report.s_min > 0.0 ? report.amplitude / report.s_min
                         : (report.amplitude == 0.0 ? 0.0 : HUGE_VAL);
  return report;
}

}  // namespace locuskit
