#pragma once

// Exact integer helpers (binomial coefficients in 128-bit width) and the
// small floating-point utilities shared by the evaluation kernels.

#include <algorithm>
#include <string>
#include <vector>

#include "locuskit/errors.hpp"

namespace locuskit {

__extension__ typedef unsigned __int128 Uint128;

// Half-power bound for which every closed-form coefficient C(m,2k)*C(2k,k)
// is guaranteed to fit in Uint128 (the products are bounded by 3^m < 2^127
// for m <= 64). Larger m may still work; checked arithmetic throws once the
// width is actually exceeded.
inline constexpr int kMaxExactHalfPower = 64;

inline Uint128 checked_mul(Uint128 a, Uint128 b) {
  Uint128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("exact integer multiply exceeds 128-bit width");
  }
  return out;
}

inline Uint128 checked_add(Uint128 a, Uint128 b) {
  Uint128 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("exact integer add exceeds 128-bit width");
  }
  return out;
}

// C(n, k) by the Pascal recurrence. Addition-only, so no intermediate ever
// exceeds the largest entry of the final row; throws OverflowError once a
// coefficient genuinely does not fit in 128 bits.
inline Uint128 binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binomial: require 0 <= k <= n");
  }
  if (k > n - k) k = n - k;
  std::vector<Uint128> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = checked_add(row[j], row[j - 1]);
    }
  }
  return row[k];
}

inline std::string to_decimal_string(Uint128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return std::string(digits.rbegin(), digits.rend());
}

// base^exp by repeated squaring; exp >= 0.
inline double int_pow(double base, int exp) {
  double result = 1.0;
  double b = base;
  for (unsigned e = static_cast<unsigned>(exp); e != 0; e >>= 1) {
    if (e & 1u) result *= b;
    b *= b;
  }
  return result;
}

}  // namespace locuskit
