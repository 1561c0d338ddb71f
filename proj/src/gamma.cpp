#include "tra/gamma.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tra {

const GammaConfig& default_gamma_config() {
  static const GammaConfig config{
      7.0,
      {0.99999999999980993, 676.5203681218851, -1259.1392167224028, 771.32342877765313,
       -176.61502916214059, 12.507343278686905, -0.13857109526572012, 9.9843695780195716e-6,
       1.5056327351493116e-7}};
  return config;
}

namespace {

bool is_pole(Complex w) {
  return w.imag() == 0.0 && w.real() <= 0.0 && std::nearbyint(w.real()) == w.real();
}

Complex lanczos(Complex w, const GammaConfig& config) {
  w -= 1.0;
  Complex series = config.coefficients[0];
  for (std::size_t i = 1; i < config.coefficients.size(); ++i) {
    series += config.coefficients[i] / (w + static_cast<double>(i));
  }
  const Complex t = w + config.lanczos_g + 0.5;
  // log form keeps t^(w+1/2) from overflowing before e^-t brings it back.
  const Complex log_gamma = 0.5 * std::log(2.0 * std::numbers::pi) + (w + 0.5) * std::log(t) - t +
                            std::log(series);
  if (log_gamma.real() > 709.78) throw std::range_error("gamma_complex: overflow");
  return std::exp(log_gamma);
}

}  // namespace

Complex gamma_complex(Complex w, const GammaConfig& config) {
  if (!is_finite(w)) throw std::domain_error("gamma_complex: non-finite argument");
  if (is_pole(w)) throw std::domain_error("gamma_complex: pole at non-positive integer");
  if (w.real() < 0.5) {
    const Complex s = std::sin(std::numbers::pi * w);
    return std::numbers::pi / (s * lanczos(1.0 - w, config));
  }
  return lanczos(w, config);
}

double abs_gamma_shifted(int l, double sigma) {
  if (l < 0) throw std::domain_error("abs_gamma_shifted: l must be non-negative");
  const double plus = std::abs(gamma_complex({l + 1.0, sigma}));
  [[maybe_unused]] const double minus = std::abs(gamma_complex({l + 1.0, -sigma}));
  assert(std::abs(plus - minus) <= 1e-14 * plus);
  return plus;
}

}  // namespace tra
