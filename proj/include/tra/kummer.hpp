#pragma once

#include "tra/scalar.hpp"

namespace tra {

/// Parameters (a, b, z) of 1F1(a; b; z).
struct HypergeometricParams {
  Complex a;
  Complex b;
  Complex z;
};

/// Outcome of any truncated series evaluation.
struct SeriesResult {
  Complex value;
  int terms_used = 0;
  double last_term_magnitude = 0.0;
  // Set when the last three terms were all at or below tol * |value|.
  bool converged = false;
};

inline constexpr double kOracleDefaultTol = 1e-20;
inline constexpr int kOracleMaxTerms = 10000;

/// True when b is 0, -1, -2, ...
bool is_nonpositive_integer(Complex b);

/// Reference 1F1(a; b; z) from the Kummer power series in double-double.
///
/// For Re(z) < 0 the series is summed for 1F1(b-a; b; -z) and multiplied by
/// e^z, which removes the alternating cancellation. A non-converged sum is
/// returned with converged = false. Throws std::domain_error when b is a
/// non-positive integer or tol/max_terms are out of range.
SeriesResult hyp1f1_oracle(const HypergeometricParams& p, double tol = kOracleDefaultTol,
                           int max_terms = kOracleMaxTerms);

/// Plain power series for 1F1(a; b; z) with no transformation applied.
SeriesResult hyp1f1_series(const HypergeometricParams& p, double tol = kOracleDefaultTol,
                           int max_terms = kOracleMaxTerms);

/// |S(a;b;z) - e^z S(b-a;b;-z)| / |S(a;b;z)|, both sides summed directly.
/// Throws std::runtime_error if either series fails to converge.
double kummer_transform_residual(const HypergeometricParams& p);

}  // namespace tra
