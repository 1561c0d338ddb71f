#pragma once

#include <complex>
#include <span>

namespace tra {

using Complex = std::complex<double>;

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2 (double-double).
///
/// Gives roughly 32 significant digits, which is enough to carry partial
/// sums of alternating or cancelling series well below double rounding.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double x) : hi(x), lo(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  [[nodiscard]] double value() const { return hi + lo; }
};

DoubleDouble operator+(DoubleDouble x, DoubleDouble y);
DoubleDouble operator-(DoubleDouble x, DoubleDouble y);
DoubleDouble operator-(DoubleDouble x);
DoubleDouble operator*(DoubleDouble x, DoubleDouble y);
DoubleDouble operator/(DoubleDouble x, DoubleDouble y);
DoubleDouble abs(DoubleDouble x);
bool operator<(DoubleDouble x, DoubleDouble y);

/// Error-free transformations.
DoubleDouble two_sum(double a, double b);
DoubleDouble two_prod(double a, double b);

/// Complex number with double-double components.
struct ComplexDD {
  DoubleDouble re;
  DoubleDouble im;

  constexpr ComplexDD() = default;
  constexpr ComplexDD(DoubleDouble r, DoubleDouble i) : re(r), im(i) {}
  ComplexDD(Complex z) : re(z.real()), im(z.imag()) {}  // NOLINT(google-explicit-constructor)

  [[nodiscard]] Complex value() const { return {re.value(), im.value()}; }
  /// |z| rounded to double.
  [[nodiscard]] double magnitude() const;
};

ComplexDD operator+(const ComplexDD& x, const ComplexDD& y);
ComplexDD operator-(const ComplexDD& x, const ComplexDD& y);
ComplexDD operator*(const ComplexDD& x, const ComplexDD& y);
ComplexDD operator/(const ComplexDD& x, const ComplexDD& y);
ComplexDD operator*(const ComplexDD& x, DoubleDouble s);
ComplexDD operator/(const ComplexDD& x, DoubleDouble s);

// Running sum used by every series evaluator. The accumulator is exact up to
// double-double precision regardless of the order in which terms arrive.
using ExtendedAccumulator = DoubleDouble;

/// acc + x via two-sum. Throws std::invalid_argument for non-finite input and
/// std::range_error if the sum overflows.
ExtendedAccumulator extended_add(ExtendedAccumulator acc, double x);

/// Sum of complex terms with double-double accumulation of each component.
/// Throws std::invalid_argument if any term is NaN or infinite.
Complex compensated_sum(std::span<const Complex> terms);

/// True when both components are finite.
inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace tra
