#include "tra/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tra {

BesselOrder::BesselOrder(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || nu < 0.0) {
    throw std::domain_error("BesselOrder: order must be finite and non-negative, got " +
                            std::to_string(nu));
  }
}

namespace {

constexpr double kSeriesTol = 1e-30;
constexpr int kSeriesMaxTerms = 2000;

void check_argument(double nu, Complex w, double max_order) {
  if (!is_finite(w) || std::abs(w) > kBesselMaxArgument) {
    throw std::domain_error("bessel: |w| must not exceed 60");
  }
  if (nu > max_order) throw std::domain_error("bessel: order too large");
}

// (w/2)^ν / Γ(ν+1), switching to logarithms once Γ(ν+1) would overflow.
Complex leading_factor(double nu, Complex half_w) {
  if (nu == 0.0) return 1.0;
  if (nu + 1.0 < 170.0) return std::pow(half_w, nu) / std::tgamma(nu + 1.0);
  return std::exp(nu * std::log(half_w) - std::lgamma(nu + 1.0));
}

// Σ_k q^k / (k! (ν+1)_k) with q = ∓w²/4, terms recurred in double-double.
ComplexDD ascending_series(DoubleDouble nu, const ComplexDD& q) {
  ComplexDD term(Complex{1.0, 0.0});
  ComplexDD sum = term;
  for (int k = 0; k < kSeriesMaxTerms; ++k) {
    const DoubleDouble denom = DoubleDouble(k + 1.0) * (nu + DoubleDouble(k + 1.0));
    term = term * q / denom;
    sum = sum + term;
    const double t = term.magnitude();
    if (t == 0.0 || t < kSeriesTol * sum.magnitude()) return sum;
  }
  throw std::runtime_error("bessel: ascending series did not converge");
}

// Shared by J (sign = -1) and I (sign = +1): orders ν0..ν0+n_max at (w/2).
std::vector<ComplexDD> sequence_dd(double nu0, int n_max, Complex half_w, double sign) {
  std::vector<ComplexDD> out(static_cast<std::size_t>(n_max) + 1);
  if (half_w == Complex{0.0, 0.0}) {
    out[0] = ComplexDD(Complex{nu0 == 0.0 ? 1.0 : 0.0, 0.0});
    return out;
  }
  const ComplexDD hw(half_w);
  const ComplexDD q = ComplexDD(Complex{sign, 0.0}) * hw * hw;
  ComplexDD prefactor(leading_factor(nu0, half_w));
  for (int n = 0; n <= n_max; ++n) {
    const DoubleDouble order = DoubleDouble(nu0) + DoubleDouble(static_cast<double>(n));
    if (n > 0) prefactor = prefactor * hw / order;
    if (prefactor.re.hi == 0.0 && prefactor.im.hi == 0.0) break;  // underflow; rest stays 0
    out[n] = prefactor * ascending_series(order, q);
  }
  return out;
}

}  // namespace

namespace detail {

std::vector<ComplexDD> bessel_j_sequence_dd(double nu0, int n_max, Complex w) {
  return sequence_dd(nu0, n_max, 0.5 * w, -1.0);
}

std::vector<DoubleDouble> bessel_i_sequence_dd(double nu0, int n_max, double x) {
  const auto seq = sequence_dd(nu0, n_max, 0.5 * x, 1.0);
  std::vector<DoubleDouble> out;
  out.reserve(seq.size());
  for (const auto& v : seq) out.push_back(v.re);
  return out;
}

}  // namespace detail

Complex bessel_j(BesselOrder nu, Complex w) {
  check_argument(nu.value(), w, kBesselMaxOrder);
  return detail::bessel_j_sequence_dd(nu.value(), 0, w)[0].value();
}

BesselSequence bessel_j_sequence(double nu0, int n_max, Complex w) {
  const BesselOrder order(nu0);
  if (n_max < 0 || n_max > kBesselMaxSequence) {
    throw std::domain_error("bessel_j_sequence: n_max must lie in [0, 200]");
  }
  check_argument(order.value(), w, kBesselMaxOrder);
  BesselSequence seq{nu0, w, {}};
  seq.values.reserve(static_cast<std::size_t>(n_max) + 1);
  for (const auto& v : detail::bessel_j_sequence_dd(nu0, n_max, w)) seq.values.push_back(v.value());
  return seq;
}

BesselSequence bessel_j_sequence_backward(double nu0, int n_max, Complex w) {
  BesselSequence series = bessel_j_sequence(nu0, std::max(n_max, 1), w);
  BesselSequence seq{nu0, w, std::vector<Complex>(static_cast<std::size_t>(n_max) + 1)};
  if (w == Complex{0.0, 0.0}) {
    for (int n = 0; n <= n_max; ++n) seq.values[n] = series.values[n];
    return seq;
  }

  // Start far enough above the turning point |w| for the minimal solution to dominate.
  const int start = n_max + 15 + static_cast<int>(std::ceil(std::abs(w)));
  const Complex two_over_w = 2.0 / w;
  Complex upper = 0.0;
  Complex current = 1e-280;
  std::vector<Complex> raw(static_cast<std::size_t>(n_max) + 2);
  for (int m = start; m >= 1; --m) {
    if (m <= n_max + 1) raw[m] = current;
    const Complex lower = two_over_w * (nu0 + m) * current - upper;
    upper = current;
    current = lower;
    if (std::abs(current) > 1e250) {
      constexpr double kScale = 1e-250;
      current *= kScale;
      upper *= kScale;
      for (auto& v : raw) v *= kScale;
    }
  }
  raw[0] = current;
  const double top = std::max(std::abs(raw[0]), std::abs(raw[1]));
  for (auto& v : raw) v /= top;

  // Least-squares scale against the series at the two lowest orders.
  const Complex s0 = series.values[0];
  const Complex s1 = series.values[1];
  const Complex num = s0 * std::conj(raw[0]) + s1 * std::conj(raw[1]);
  const double den = std::norm(raw[0]) + std::norm(raw[1]);
  const Complex scale = num / den;
  for (int n = 0; n <= n_max; ++n) seq.values[n] = scale * raw[n];
  return seq;
}

double bessel_i(double nu, double x) {
  if (!std::isfinite(nu) || nu < 0.0 || nu > kBesselMaxOrder) {
    throw std::domain_error("bessel_i: order must lie in [0, 100]");
  }
  if (!(x > 0.0) || x > kBesselMaxArgument) {
    throw std::domain_error("bessel_i: argument must lie in (0, 60]");
  }
  return detail::bessel_i_sequence_dd(nu, 0, x)[0].value();
}

}  // namespace tra
