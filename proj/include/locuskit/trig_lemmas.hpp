#pragma once

// Closed-form evaluators for two trigonometric sums over the directions of a
// regular n-gon, each paired with a literal-summation oracle:
//
//   multiple-argument sum   sum_k cos(m (alpha - (k-1) 2pi/n))
//       = 0 unless n divides m, in which case it is n cos(m alpha);
//
//   power sum               sum_k cos^m (alpha - (k-1) 2pi/n)
//       = 0 for odd m, n C(m, m/2) / 2^m for even m, valid for m < n.
//
// The power-reduction expansion of cos^m into a constant plus cosines of
// multiple angles is exposed as well; all its coefficients are dyadic
// rationals and are kept exact.

#include <cmath>
#include <numbers>
#include <vector>

#include "locuskit/errors.hpp"
#include "locuskit/numeric.hpp"

namespace locuskit {

// num / 2^den_pow2, kept exact in integer form.
struct Pow2Rational {
  Uint128 num = 0;
  int den_pow2 = 0;

  double value() const {
    return std::ldexp(static_cast<double>(num), -den_pow2);
  }
};

namespace detail {
inline void require_direction_count(int n) {
  if (n < 2) {
    throw DomainError("cosine sum: direction count n must be >= 2");
  }
}
inline void require_positive_power(int m) {
  if (m < 1) {
    throw DomainError("cosine sum: power m must be >= 1");
  }
}
}  // namespace detail

// Analytic value of sum_{k=1}^{n} cos(m (alpha - (k-1) 2pi/n)). Total in m:
// zero whenever n does not divide m, n cos(m alpha) when it does.
inline double cosine_multiple_sum(int n, int m, double alpha) {
  detail::require_direction_count(n);
  detail::require_positive_power(m);
  if (m % n != 0) return 0.0;
  return static_cast<double>(n) * std::cos(static_cast<double>(m) * alpha);
}

// Term-by-term oracle for cosine_multiple_sum.
inline double cosine_multiple_sum_direct(int n, int m, double alpha) {
  detail::require_direction_count(n);
  detail::require_positive_power(m);
  const double step = 2.0 * std::numbers::pi / n;
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    sum += std::cos(static_cast<double>(m) * (alpha - (k - 1) * step));
  }
  return sum;
}

// Analytic cosine power sum; requires m <= n-1 (the identity fails at m = n,
// where frequency-m terms survive the multiple-angle cancellation).
inline double cosine_power_sum(int n, int m, double /*alpha*/) {
  detail::require_direction_count(n);
  detail::require_positive_power(m);
  if (m >= n) {
    throw DomainError("cosine_power_sum: requires m < n; use the direct oracle",
                      ErrorCode::DomainMGeN);
  }
  if (m % 2 != 0) return 0.0;
  return std::ldexp(static_cast<double>(n) *
                        static_cast<double>(binomial(m, m / 2)),
                    -m);
}

// Term-by-term oracle; no upper bound on m.
inline double cosine_power_sum_direct(int n, int m, double alpha) {
  detail::require_direction_count(n);
  detail::require_positive_power(m);
  const double step = 2.0 * std::numbers::pi / n;
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    sum += int_pow(std::cos(alpha - (k - 1) * step), m);
  }
  return sum;
}

/// One cosine harmonic of a power-reduction expansion.
struct Harmonic {
  int frequency;       // j = m - 2k, strictly decreasing by 2 down to 1 or 2
  Pow2Rational weight; // 2 C(m,k) / 2^m
};

/// cos^m(theta) = constant_term + sum_i weight_i * cos(frequency_i * theta).
struct PowerReductionExpansion {
  int m = 0;
  Pow2Rational constant_term;       // 0 for odd m, C(m, m/2) / 2^m for even m
  std::vector<Harmonic> harmonics;  // k = 0 .. ceil(m/2)-1

  double evaluate(double theta) const {
    double sum = constant_term.value();
    for (const Harmonic& h : harmonics) {
      sum += h.weight.value() * std::cos(h.frequency * theta);
    }
    return sum;
  }
};

inline PowerReductionExpansion power_reduction(int m) {
  detail::require_positive_power(m);
  PowerReductionExpansion out;
  out.m = m;
  if (m % 2 == 0) {
    out.constant_term = {binomial(m, m / 2), m};
  } else {
    out.constant_term = {0, m};
  }
  const int count = (m + 1) / 2;
  out.harmonics.reserve(count);
  for (int k = 0; k < count; ++k) {
    out.harmonics.push_back(
        {m - 2 * k, {checked_mul(2, binomial(m, k)), m}});
  }
  return out;
}

}  // namespace locuskit
