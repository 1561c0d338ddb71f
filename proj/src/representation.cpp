#include "tra/representation.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tra/bessel.hpp"
#include "tra/gamma.hpp"

namespace tra {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_length(int n, int limit, const char* what) {
  if (n < 0 || n > limit) {
    throw std::domain_error(std::string(what) + ": length must lie in [0, " +
                            std::to_string(limit) + "]");
  }
}

double real_b(const HypergeometricParams& p, const char* what) {
  if (p.b.imag() != 0.0) throw std::domain_error(std::string(what) + ": b must be real");
  return p.b.real();
}

// b - 2a without rounding. Adding +0.0 drops the -0.0 imaginary part a real a
// would otherwise produce, which would put √(2μz) on the wrong side of the cut.
ComplexDD mu_exact(double b, Complex a) {
  return {two_sum(b, -2.0 * a.real()), DoubleDouble(-2.0 * a.imag() + 0.0)};
}

// i * m
ComplexDD times_i(const ComplexDD& m) { return {-m.im, m.re}; }

// y = 2i(b - 2a)
ComplexDD rep18_argument(double b, Complex a) {
  const ComplexDD im = times_i(mu_exact(b, a));
  return {im.re * DoubleDouble(2.0), im.im * DoubleDouble(2.0)};
}

bool same(const ComplexDD& x, const ComplexDD& y) {
  return x.re.hi == y.re.hi && x.re.lo == y.re.lo && x.im.hi == y.im.hi && x.im.lo == y.im.lo;
}

std::vector<Complex> rounded(const std::vector<ComplexDD>& v) {
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.value());
  return out;
}

// prefactor * Σ terms, with the truncation metadata.
SeriesResult finish_series(Complex prefactor, const std::vector<ComplexDD>& terms) {
  ComplexDD sum;
  for (const auto& t : terms) sum = sum + t;
  SeriesResult r;
  r.value = prefactor * sum.value();
  r.terms_used = static_cast<int>(terms.size());
  const double scale = std::abs(prefactor);
  r.last_term_magnitude = scale * terms.back().magnitude();
  const double bound = kTruncationTol * std::abs(r.value);
  int small = 0;
  for (auto it = terms.rbegin(); it != terms.rend() && small < 3; ++it) {
    if (scale * it->magnitude() > bound) break;
    ++small;
  }
  r.converged = small >= 3;
  return r;
}

// Σ_{n=0}^{N} P_n J_{n+ν}(iz/2) in double-double.
std::vector<ComplexDD> rep18_terms(const PCoefficients& pn, double nu, Complex z, int n_terms) {
  const auto bessel = detail::bessel_j_sequence_dd(nu, n_terms, 0.5 * kI * z);
  std::vector<ComplexDD> terms(static_cast<std::size_t>(n_terms) + 1);
  for (int n = 0; n <= n_terms; ++n) terms[n] = pn.values_dd()[n] * bessel[n];
  return terms;
}

// R_n (2μz)^{n/2} J_{n+b-1}(√(2μz)), all powers from one principal root.
std::vector<ComplexDD> rep19_terms(const RCoefficients& rn, double b, Complex root, int n_terms) {
  const auto bessel = detail::bessel_j_sequence_dd(b - 1.0, n_terms, root);
  const ComplexDD root_dd(root);
  std::vector<ComplexDD> terms(static_cast<std::size_t>(n_terms) + 1);
  ComplexDD power(Complex{1.0, 0.0});
  for (int n = 0; n <= n_terms; ++n) {
    terms[n] = rn.values_dd()[n] * power * bessel[n];
    power = power * root_dd;
  }
  return terms;
}

Complex rep19_root(const ComplexDD& mu, Complex z, const char* what) {
  const Complex root = std::sqrt(2.0 * mu.value() * z);
  if (std::abs(root) > kBesselMaxArgument) {
    throw std::domain_error(std::string(what) + ": |2 mu z| too large");
  }
  return root;
}

}  // namespace

double p_forward_coefficient(int n, double b) {
  return 2.0 * (n + 1.0) * (n + b) / (2.0 * n + b + 1.0);
}

double p_backward_coefficient(int n, double b) {
  if (n == 0) return 0.0;
  return 2.0 * (n - 1.0) * (n + b - 2.0) / (2.0 * n + b - 3.0);
}

PCoefficients::PCoefficients(double b, Complex y, int n_max) : PCoefficients(b, ComplexDD(y), n_max) {}

PCoefficients::PCoefficients(double b, const ComplexDD& y, int n_max) : b_(b), y_(y) {
  if (!std::isfinite(b) || !(b > 0.0) || b == 1.0) {
    throw std::domain_error("p_coefficients: b must be positive and different from 1");
  }
  if (!is_finite(y.value())) throw std::domain_error("p_coefficients: non-finite y");
  check_length(n_max, kMaxCoefficients, "p_coefficients");
  exact_.reserve(static_cast<std::size_t>(n_max) + 1);
  exact_.emplace_back(Complex{1.0, 0.0});
  values_.emplace_back(1.0);
  extend_to(n_max);
}

void PCoefficients::extend_to(int n_max) {
  check_length(n_max, kMaxCoefficients, "p_coefficients");
  const DoubleDouble b(b_);
  for (int n = n_max_index(); n < n_max; ++n) {
    // c⁺_n = 2(n+1)(n+b)/(2n+b+1), c⁻_n = 2(n-1)(n+b-2)/(2n+b-3)
    const DoubleDouble dn(static_cast<double>(n));
    const DoubleDouble forward =
        DoubleDouble(2.0 * (n + 1.0)) * (dn + b) / (DoubleDouble(2.0 * n + 1.0) + b);
    assert(forward.hi != 0.0);
    ComplexDD next = y_ * exact_[n];
    if (n > 1) {
      const DoubleDouble backward =
          DoubleDouble(2.0 * (n - 1.0)) * (dn + b - DoubleDouble(2.0)) / (DoubleDouble(2.0 * n - 3.0) + b);
      next = next - exact_[n - 1] * backward;
    }
    exact_.push_back(next / forward);
    values_.push_back(exact_.back().value());
  }
}

PCoefficients PCoefficients::extended(int n_max) const {
  PCoefficients copy = *this;
  if (n_max > this->n_max()) copy.extend_to(n_max);
  return copy;
}

PCoefficients p_coefficients(double b, Complex y, int n_max) { return {b, y, n_max}; }

RCoefficients::RCoefficients(double b, Complex mu, int n_max) : RCoefficients(b, ComplexDD(mu), n_max) {}

RCoefficients::RCoefficients(double b, const ComplexDD& mu, int n_max) : b_(b), mu_(mu) {
  if (mu.value() == Complex{0.0, 0.0}) {
    throw std::domain_error("r_coefficients: mu = b - 2a must be non-zero");
  }
  if (!std::isfinite(b) || !is_finite(mu.value())) throw std::domain_error("r_coefficients: non-finite input");
  check_length(n_max, kMaxCoefficients, "r_coefficients");
  exact_.reserve(static_cast<std::size_t>(n_max) + 1);
  exact_.emplace_back(Complex{1.0, 0.0});
  const ComplexDD four_mu_sq = ComplexDD(Complex{4.0, 0.0}) * mu * mu;
  auto at = [this](int k) { return k < 0 ? ComplexDD() : exact_[static_cast<std::size_t>(k)]; };
  for (int n = 0; n < n_max; ++n) {
    const DoubleDouble weight = DoubleDouble(n - 1.0) + DoubleDouble(b);
    const ComplexDD rhs = at(n - 1) * weight - at(n - 2) * DoubleDouble(0.5);
    exact_.push_back(rhs / (four_mu_sq * DoubleDouble(n + 1.0)));
  }
  values_ = rounded(exact_);
}

RCoefficients r_coefficients(double b, Complex mu, int n_max) { return {b, mu, n_max}; }

SeriesResult eval_rep18(const HypergeometricParams& p, int n_terms) {
  const double b = real_b(p, "eval_rep18");
  if (!(b > 1.0)) throw std::domain_error("eval_rep18: b must exceed 1");
  check_length(n_terms, kMaxSeriesTerms, "eval_rep18");
  return eval_rep18(p, PCoefficients(b, rep18_argument(b, p.a), n_terms), n_terms);
}

SeriesResult eval_rep18(const HypergeometricParams& p, const PCoefficients& coeffs, int n_terms) {
  const double b = real_b(p, "eval_rep18");
  if (!(b > 1.0)) throw std::domain_error("eval_rep18: b must exceed 1");
  if (p.z == Complex{0.0, 0.0}) {
    throw std::domain_error("eval_rep18: z = 0 is a removable singularity (limit 1)");
  }
  check_length(n_terms, kMaxSeriesTerms, "eval_rep18");
  if (coeffs.b() != b || !same(coeffs.y_dd(), rep18_argument(b, p.a))) {
    throw std::invalid_argument("eval_rep18: coefficients belong to different (a, b)");
  }
  if (std::abs(0.5 * p.z) > kBesselMaxArgument) throw std::domain_error("eval_rep18: |z| too large");

  const double nu = 0.5 * (b - 1.0);
  const auto terms = coeffs.n_max() >= n_terms ? rep18_terms(coeffs, nu, p.z, n_terms)
                                                : rep18_terms(coeffs.extended(n_terms), nu, p.z, n_terms);
  // 2^ν (iz/2)^{-ν} = (iz/4)^{-ν}; merged with e^{z/2} into one exponential.
  const Complex prefactor =
      gamma_complex(nu + 1.0) * std::exp(0.5 * p.z - nu * std::log(0.25 * kI * p.z));
  return finish_series(prefactor, terms);
}

double eval_rep18_real_path(double a, double b, double x, int n_terms) {
  if (!std::isfinite(a) || !(b > 1.0)) throw std::domain_error("eval_rep18_real_path: need b > 1");
  if (!(x > 0.0)) throw std::domain_error("eval_rep18_real_path: x must be positive");
  check_length(n_terms, kMaxSeriesTerms, "eval_rep18_real_path");
  if (0.5 * x > kBesselMaxArgument) throw std::domain_error("eval_rep18_real_path: x too large");

  const PCoefficients pn(b, rep18_argument(b, a), n_terms);
  const double nu = 0.5 * (b - 1.0);
  const auto bessel = detail::bessel_i_sequence_dd(nu, n_terms, 0.5 * x);
  DoubleDouble sum;
  for (int n = 0; n <= n_terms; ++n) {
    // (-1)^n Re(P_n (-i)^n): the rotation only permutes and negates components.
    const ComplexDD& pv = pn.values_dd()[n];
    DoubleDouble q;
    switch (n % 4) {
      case 0: q = pv.re; break;
      case 1: q = -pv.im; break;  // -Re(-i P) = -Im P
      case 2: q = -pv.re; break;  // +Re(-P)
      default: q = pv.im; break;  // -Re(i P) = Im P
    }
    sum = sum + q * bessel[n];
  }
  const double prefactor = gamma_complex(nu + 1.0).real() * std::exp(0.5 * x - nu * std::log(0.25 * x));
  return prefactor * sum.value();
}

SeriesResult eval_rep19(const HypergeometricParams& p, int n_terms) {
  const double b = real_b(p, "eval_rep19");
  if (!(b > 0.0)) throw std::domain_error("eval_rep19: b must be positive");
  if (p.z == Complex{0.0, 0.0}) throw std::domain_error("eval_rep19: z must be non-zero");
  const ComplexDD mu = mu_exact(b, p.a);
  if (mu.value() == Complex{0.0, 0.0}) throw std::domain_error("eval_rep19: b = 2a is excluded");
  check_length(n_terms, kMaxSeriesTerms, "eval_rep19");

  const Complex root = rep19_root(mu, p.z, "eval_rep19");
  const RCoefficients rn(b, mu, n_terms);
  const auto terms = rep19_terms(rn, b, root, n_terms);
  const Complex prefactor =
      std::pow(2.0, b - 1.0) * gamma_complex(b) * std::exp(0.5 * p.z) * std::pow(root, 1.0 - b);
  return finish_series(prefactor, terms);
}

double relative_deviation(double a, double b, double x, int n_terms, Representation method) {
  const HypergeometricParams p{a, b, x};
  const SeriesResult exact = hyp1f1_oracle(p);
  if (!exact.converged) throw std::runtime_error("relative_deviation: oracle did not converge");
  const double approx = method == Representation::rep18 ? eval_rep18(p, n_terms).value.real()
                                                        : eval_rep19(p, n_terms).value.real();
  const double f = exact.value.real();
  const double denom = f + approx;
  if (denom == 0.0) throw DegenerateDenominator("relative_deviation: 1F1 + F = 0");
  return (f - approx) / denom;
}

double eq20_residual(double a, double b, Complex z, int n_terms) {
  if (!(b > 1.0)) throw std::domain_error("eq20_residual: b must exceed 1");
  if (z == Complex{0.0, 0.0}) throw std::domain_error("eq20_residual: z must be non-zero");
  const ComplexDD mu = mu_exact(b, a);
  if (mu.value() == Complex{0.0, 0.0}) throw std::domain_error("eq20_residual: b = 2a is excluded");
  check_length(n_terms, kMaxSeriesTerms, "eq20_residual");
  if (std::abs(0.5 * z) > kBesselMaxArgument) throw std::domain_error("eq20_residual: |z| too large");

  const double nu = 0.5 * (b - 1.0);
  ComplexDD lhs;
  for (const auto& t : rep18_terms(PCoefficients(b, rep18_argument(b, a), n_terms), nu, z, n_terms)) {
    lhs = lhs + t;
  }
  const Complex root = rep19_root(mu, z, "eq20_residual");
  ComplexDD rhs_sum;
  for (const auto& t : rep19_terms(RCoefficients(b, mu, n_terms), b, root, n_terms)) rhs_sum = rhs_sum + t;

  const Complex mu_c = mu.value();
  const Complex rhs = gamma_complex(b) / gamma_complex(nu + 1.0) * std::pow(-2.0 * kI * mu_c, -nu) *
                      rhs_sum.value();
  const Complex left = lhs.value();
  return std::abs(left - rhs) / std::abs(left);
}

}  // namespace tra
