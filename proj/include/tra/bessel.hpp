#pragma once

#include <vector>

#include "tra/scalar.hpp"

namespace tra {

/// Non-negative real Bessel order.
class BesselOrder {
 public:
  explicit BesselOrder(double nu);
  [[nodiscard]] double value() const { return nu_; }

 private:
  double nu_;
};

inline constexpr double kBesselMaxArgument = 60.0;
inline constexpr double kBesselMaxOrder = 100.0;
inline constexpr int kBesselMaxSequence = 200;

/// J_ν(w) by the ascending power series, principal branch of (w/2)^ν.
///
/// J_ν(0) is 1 for ν = 0 and 0 otherwise. Throws std::domain_error when
/// |w| > 60 or ν > 100.
Complex bessel_j(BesselOrder nu, Complex w);

/// J_{ν0}(w), J_{ν0+1}(w), ..., J_{ν0+N}(w).
struct BesselSequence {
  double nu0 = 0.0;
  Complex argument;
  std::vector<Complex> values;

  [[nodiscard]] int count() const { return static_cast<int>(values.size()); }
};

/// Every order from ν0 to ν0 + n_max by the per-order series.
/// Throws std::domain_error for n_max outside [0, 200] or an invalid (ν0, w).
BesselSequence bessel_j_sequence(double nu0, int n_max, Complex w);

/// Same orders by Miller backward recurrence, started well above both
/// ν0 + n_max and |w| and rescaled to match the series at orders ν0 and ν0+1.
BesselSequence bessel_j_sequence_backward(double nu0, int n_max, Complex w);

/// Modified Bessel I_ν(x) for real x > 0 by its all-positive series.
/// Throws std::domain_error for x <= 0, x > 60, ν < 0 or ν > 100.
double bessel_i(double nu, double x);

namespace detail {
// Kernels without the public order/argument checks; callers validate.
// Orders ν0 > -1 are accepted. All orders of a sequence share one
// double-rounded leading factor (w/2)^ν0/Γ(ν0+1); everything after it is
// carried in double-double, so the elements are consistent with each other
// to ~1e-30 relative.
std::vector<ComplexDD> bessel_j_sequence_dd(double nu0, int n_max, Complex w);
std::vector<DoubleDouble> bessel_i_sequence_dd(double nu0, int n_max, double x);
}  // namespace detail

}  // namespace tra
