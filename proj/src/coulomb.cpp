#include "tra/coulomb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tra/bessel.hpp"
#include "tra/gamma.hpp"
#include "tra/kummer.hpp"
#include "tra/representation.hpp"

namespace tra {

CoulombParams::CoulombParams(double charge, double energy, int l)
    : charge_(charge), energy_(energy), l_(l), k_(std::sqrt(2.0 * energy)) {
  if (!std::isfinite(charge) || !std::isfinite(energy)) {
    throw std::domain_error("CoulombParams: non-finite input");
  }
  if (!(energy > 0.0)) throw std::domain_error("CoulombParams: energy must be positive");
  if (l < 0) throw std::domain_error("CoulombParams: l must be non-negative");
}

TraCoefficients tra_coefficients(int n, int l, double sigma) {
  if (n < 0 || l < 0) throw std::domain_error("tra_coefficients: n and l must be non-negative");
  const double nu = l + 0.5;
  const double shifted = n + nu;
  return {-4.0 * sigma, shifted - nu * nu / shifted};
}

double f0_norm(const CoulombParams& p) {
  const double sigma = p.sigma();
  return std::sqrt(0.5 * std::numbers::pi) / std::tgamma(p.l() + 1.0) *
         std::exp(-0.5 * std::numbers::pi * sigma) * abs_gamma_shifted(p.l(), sigma);
}

int default_coulomb_terms(const CoulombParams& p, double r) {
  return std::max(40, static_cast<int>(std::ceil(2.0 * p.k() * r)) + 20);
}

WaveSample coulomb_wave_tra(const CoulombParams& p, double r, int n_terms) {
  if (!(r > 0.0)) throw std::domain_error("coulomb_wave_tra: r must be positive");
  const double kr = p.k() * r;
  if (kr > kBesselMaxArgument) throw std::domain_error("coulomb_wave_tra: kr exceeds 60");
  if (n_terms < 0 || n_terms > kBesselMaxSequence) {
    throw std::domain_error("coulomb_wave_tra: n_terms must lie in [0, 200]");
  }
  const PCoefficients pn = p_coefficients(2.0 * p.l() + 2.0, 4.0 * p.sigma(), n_terms);
  const auto bessel = detail::bessel_j_sequence_dd(p.l() + 0.5, n_terms, kr);
  DoubleDouble sum;
  for (int n = 0; n <= n_terms; ++n) sum = sum + pn.values_dd()[n].re * bessel[n].re;
  return {r, f0_norm(p) * std::sqrt(kr) * sum.value(), WaveMethod::tra};
}

WaveSample coulomb_wave_exact(const CoulombParams& p, double r) {
  if (!(r > 0.0)) throw std::domain_error("coulomb_wave_exact: r must be positive");
  const int l = p.l();
  const double sigma = p.sigma();
  const double kr = p.k() * r;
  const SeriesResult f = hyp1f1_oracle({Complex{l + 1.0, sigma}, 2.0 * l + 2.0, Complex{0.0, -2.0 * kr}});
  if (!f.converged) throw std::runtime_error("coulomb_wave_exact: oracle did not converge");
  const Complex bracket = std::polar(1.0, kr) * f.value;
  if (std::abs(bracket.imag()) > 1e-10 * std::abs(bracket)) {
    throw std::runtime_error("coulomb_wave_exact: e^{ikr} 1F1 is not real");
  }
  const double prefactor = std::ldexp(1.0, l) * std::exp(-0.5 * std::numbers::pi * sigma) /
                           std::tgamma(2.0 * l + 2.0) * abs_gamma_shifted(l, sigma) *
                           std::pow(kr, l + 1);
  return {r, prefactor * bracket.real(), WaveMethod::exact};
}

double schrodinger_residual(const CoulombParams& p, double r, double h) {
  if (!(h > 0.0) || !(r - 2.0 * h > 0.0)) {
    throw std::domain_error("schrodinger_residual: need h > 0 and r - 2h > 0");
  }
  auto psi = [&p](double x) { return coulomb_wave_exact(p, x).psi; };
  const double center = psi(r);
  const double second = (-psi(r + 2.0 * h) + 16.0 * psi(r + h) - 30.0 * center + 16.0 * psi(r - h) -
                         psi(r - 2.0 * h)) /
                        (12.0 * h * h);
  const double l = p.l();
  const double potential = l * (l + 1.0) / (2.0 * r * r) + p.charge() / r - p.energy();
  const double residual = -0.5 * second + potential * center;
  return std::abs(residual) / std::max(1.0, std::abs(p.energy() * center));
}

}  // namespace tra
