#pragma once

#include <stdexcept>
#include <vector>

#include "tra/kummer.hpp"
#include "tra/scalar.hpp"

namespace tra {

inline constexpr int kMaxCoefficients = 500;
inline constexpr int kMaxSeriesTerms = 200;
// A truncated Bessel series counts as converged once its last three terms
// are at or below this fraction of the value.
inline constexpr double kTruncationTol = 1e-15;

/// Forward coefficient of the P_n recursion,
/// ½[(2n+b+1) - (b-1)²/(2n+b+1)] = 2(n+1)(n+b)/(2n+b+1).
double p_forward_coefficient(int n, double b);

/// Backward coefficient ½[(2n+b-3) - (b-1)²/(2n+b-3)] = 2(n-1)(n+b-2)/(2n+b-3).
/// Zero at n = 0 by convention (it multiplies P_{-1} = 0) and exactly zero at n = 1.
double p_backward_coefficient(int n, double b);

/// Polynomials P_0(y) ... P_N(y) of the Bessel-sum representation of 1F1:
///
///   y P_n = c⁺_n P_{n+1} + c⁻_n P_{n-1},   P_0 = 1, P_{-1} = 0.
///
/// The recursion runs in double-double; `values()` holds the rounded
/// results. Immutable; `extended` reuses the computed prefix.
class PCoefficients {
 public:
  /// Throws std::domain_error unless b > 0, b != 1 and 0 <= n_max <= 500.
  PCoefficients(double b, Complex y, int n_max);
  PCoefficients(double b, const ComplexDD& y, int n_max);

  [[nodiscard]] double b() const { return b_; }
  [[nodiscard]] Complex y() const { return y_.value(); }
  [[nodiscard]] const ComplexDD& y_dd() const { return y_; }
  [[nodiscard]] int n_max() const { return static_cast<int>(values_.size()) - 1; }
  [[nodiscard]] const std::vector<Complex>& values() const { return values_; }
  [[nodiscard]] const std::vector<ComplexDD>& values_dd() const { return exact_; }
  [[nodiscard]] Complex operator[](int n) const { return values_[static_cast<std::size_t>(n)]; }

  /// Copy of this sequence carried on to n_max (no-op if already that long).
  [[nodiscard]] PCoefficients extended(int n_max) const;

 private:
  void extend_to(int n_max);
  [[nodiscard]] int n_max_index() const { return static_cast<int>(exact_.size()) - 1; }

  double b_;
  ComplexDD y_;
  std::vector<ComplexDD> exact_;
  std::vector<Complex> values_;
};

PCoefficients p_coefficients(double b, Complex y, int n_max);

/// Coefficients R_0 ... R_N of the classical Bessel expansion:
///
///   4μ²(n+1) R_{n+1} = (n+b-1) R_{n-1} - ½ R_{n-2},   R_0 = 1, R_{-1} = R_{-2} = 0.
class RCoefficients {
 public:
  /// Throws std::domain_error if μ = 0 or n_max is outside [0, 500].
  RCoefficients(double b, Complex mu, int n_max);
  RCoefficients(double b, const ComplexDD& mu, int n_max);

  [[nodiscard]] double b() const { return b_; }
  [[nodiscard]] Complex mu() const { return mu_.value(); }
  [[nodiscard]] const std::vector<Complex>& values() const { return values_; }
  [[nodiscard]] const std::vector<ComplexDD>& values_dd() const { return exact_; }
  [[nodiscard]] Complex operator[](int n) const { return values_[static_cast<std::size_t>(n)]; }

 private:
  double b_;
  ComplexDD mu_;
  std::vector<ComplexDD> exact_;
  std::vector<Complex> values_;
};

RCoefficients r_coefficients(double b, Complex mu, int n_max);

/// 1F1(a;b;z) ≈ 2^ν Γ(ν+1) e^{z/2} (iz/2)^{-ν} Σ_{n=0}^{N} P_n(2i(b-2a)) J_{n+ν}(iz/2),
/// ν = (b-1)/2.
///
/// b must be real and > 1; z must be non-zero (the z -> 0 limit is 1 but is
/// not evaluated). Throws std::domain_error otherwise.
SeriesResult eval_rep18(const HypergeometricParams& p, int n_terms);

/// Same, reusing precomputed coefficients (must match b and y = 2i(b-2a)).
SeriesResult eval_rep18(const HypergeometricParams& p, const PCoefficients& coeffs, int n_terms);

/// Real-argument form of eval_rep18 with the phases eliminated:
/// Σ (-1)^n q_n I_{n+ν}(x/2), q_n = P_n / i^n.
double eval_rep18_real_path(double a, double b, double x, int n_terms);

/// 1F1(a;b;z) ≈ 2^{b-1} Γ(b) e^{z/2} (2μz)^{(1-b)/2} Σ R_n (2μz)^{n/2} J_{n+b-1}(√(2μz)),
/// μ = b - 2a, with every power taken from the same principal square root.
SeriesResult eval_rep19(const HypergeometricParams& p, int n_terms);

enum class Representation { rep18, rep19 };

/// Thrown when 1F1 + F vanishes in the deviation metric.
class DegenerateDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Signed Δ(x) = (1F1 - F)/(1F1 + F) against hyp1f1_oracle for real a, b, x.
double relative_deviation(double a, double b, double x, int n_terms, Representation method);

/// Relative mismatch between Σ P_n J_{n+ν}(iz/2) and
/// Γ(b)/Γ(ν+1) (-2iμ)^{-ν} Σ R_n (2μz)^{n/2} J_{n+b-1}(√(2μz)) at truncation N.
double eq20_residual(double a, double b, Complex z, int n_terms);

}  // namespace tra
