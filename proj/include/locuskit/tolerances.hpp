#pragma once

// Default numerical tolerances. The identities behind the library are exact;
// these constants only absorb floating-point rounding. Every operation that
// compares against a tolerance takes it as a parameter defaulting to one of
// the values below, so callers can override per call.

namespace locuskit::tol {

// |closed - direct| <= kOracleRel * closed (n <= 12, r, ell <= 10).
inline constexpr double kOracleRel = 1e-10;

// Scan flatness certifying alpha-independence for m <= n-1.
inline constexpr double kAlphaIndependenceRel = 1e-12;

// Lemma residual budget per summand: |analytic - direct| <= kLemmaAbs * n.
inline constexpr double kLemmaAbs = 1e-12;

// Point-vs-circle band on the target sum around n * r^(2m).
inline constexpr double kPointBandRel = 1e-9;

// Bracket width target for the bisection on u = ell^2.
inline constexpr double kBisectionRelU = 1e-14;

// Degeneracy threshold for the weighted quadratic-locus classifier.
inline constexpr double kWeightedEps = 1e-9;

}  // namespace locuskit::tol
