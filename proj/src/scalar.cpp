#include "tra/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace tra {

DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

namespace {

DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

}  // namespace

DoubleDouble operator+(DoubleDouble x, DoubleDouble y) {
  DoubleDouble s = two_sum(x.hi, y.hi);
  DoubleDouble t = two_sum(x.lo, y.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

DoubleDouble operator-(DoubleDouble x) { return {-x.hi, -x.lo}; }

DoubleDouble operator-(DoubleDouble x, DoubleDouble y) { return x + (-y); }

DoubleDouble operator*(DoubleDouble x, DoubleDouble y) {
  DoubleDouble p = two_prod(x.hi, y.hi);
  p.lo += x.hi * y.lo + x.lo * y.hi;
  return quick_two_sum(p.hi, p.lo);
}

DoubleDouble operator/(DoubleDouble x, DoubleDouble y) {
  // Two Newton corrections on the double quotient.
  const double q1 = x.hi / y.hi;
  DoubleDouble r = x - y * DoubleDouble(q1);
  const double q2 = r.hi / y.hi;
  r = r - y * DoubleDouble(q2);
  const double q3 = r.hi / y.hi;
  return quick_two_sum(q1, q2) + DoubleDouble(q3);
}

DoubleDouble abs(DoubleDouble x) { return x.hi < 0.0 ? -x : x; }

bool operator<(DoubleDouble x, DoubleDouble y) {
  return x.hi < y.hi || (x.hi == y.hi && x.lo < y.lo);
}

double ComplexDD::magnitude() const { return std::hypot(re.value(), im.value()); }

ComplexDD operator+(const ComplexDD& x, const ComplexDD& y) { return {x.re + y.re, x.im + y.im}; }

ComplexDD operator-(const ComplexDD& x, const ComplexDD& y) { return {x.re - y.re, x.im - y.im}; }

ComplexDD operator*(const ComplexDD& x, const ComplexDD& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

ComplexDD operator/(const ComplexDD& x, const ComplexDD& y) {
  const DoubleDouble denom = y.re * y.re + y.im * y.im;
  const DoubleDouble re = x.re * y.re + x.im * y.im;
  const DoubleDouble im = x.im * y.re - x.re * y.im;
  return {re / denom, im / denom};
}

ComplexDD operator*(const ComplexDD& x, DoubleDouble s) { return {x.re * s, x.im * s}; }

ComplexDD operator/(const ComplexDD& x, DoubleDouble s) { return {x.re / s, x.im / s}; }

ExtendedAccumulator extended_add(ExtendedAccumulator acc, double x) {
  if (!std::isfinite(x) || !std::isfinite(acc.hi) || !std::isfinite(acc.lo)) {
    throw std::invalid_argument("extended_add: non-finite input");
  }
  DoubleDouble s = two_sum(acc.hi, x);
  s.lo += acc.lo;
  s = quick_two_sum(s.hi, s.lo);
  if (!std::isfinite(s.hi)) throw std::range_error("extended_add: overflow");
  return s;
}

Complex compensated_sum(std::span<const Complex> terms) {
  ExtendedAccumulator re;
  ExtendedAccumulator im;
  for (const Complex& t : terms) {
    if (!is_finite(t)) throw std::invalid_argument("compensated_sum: non-finite term");
    re = extended_add(re, t.real());
    im = extended_add(im, t.imag());
  }
  return {re.value(), im.value()};
}

}  // namespace tra
