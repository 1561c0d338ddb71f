#pragma once

#include "tra/scalar.hpp"

namespace tra {

/// Charge Z, energy E > 0 and angular momentum l (atomic units, ħ = m = 1).
class CoulombParams {
 public:
  /// Throws std::domain_error for E <= 0, l < 0 or non-finite input.
  CoulombParams(double charge, double energy, int l);

  [[nodiscard]] double charge() const { return charge_; }
  [[nodiscard]] double energy() const { return energy_; }
  [[nodiscard]] int l() const { return l_; }
  /// Wavenumber √(2E).
  [[nodiscard]] double k() const { return k_; }
  /// Sommerfeld parameter Z/k.
  [[nodiscard]] double sigma() const { return charge_ / k_; }

 private:
  double charge_;
  double energy_;
  int l_;
  double k_;
};

enum class WaveMethod { tra, exact };

struct WaveSample {
  double r = 0.0;
  double psi = 0.0;
  WaveMethod method = WaveMethod::tra;
};

/// Diagonal and off-diagonal entries of the tridiagonal wave operator in the
/// x^{1/2} J_{n+l+1/2}(x) basis.
struct TraCoefficients {
  double alpha;
  double gamma;
};

/// α_n = -4σ, γ_n = (n+ν) - (l+½)²/(n+ν) with ν = l + ½.
TraCoefficients tra_coefficients(int n, int l, double sigma);

/// √(π/2)/Γ(l+1) · e^{-πσ/2} · |Γ(l+1+iσ)|.
double f0_norm(const CoulombParams& p);

/// Default truncation max(40, 2kr + 20).
int default_coulomb_terms(const CoulombParams& p, double r);

/// ψ(r) = f0 √(kr) Σ_{n=0}^{N} P_n(4σ) J_{n+l+½}(kr).
/// Throws std::domain_error for r <= 0, kr > 60 or N outside [0, 200].
WaveSample coulomb_wave_tra(const CoulombParams& p, double r, int n_terms);

/// Closed form via 1F1(l+1+iσ; 2l+2; -2ikr).
/// Throws std::runtime_error if the oracle fails or the bracket is not real.
WaveSample coulomb_wave_exact(const CoulombParams& p, double r);

/// |-½ψ'' + (l(l+1)/2r² + Z/r - E)ψ| / max(1, |Eψ|) with a 5-point ψ''.
/// Throws std::domain_error unless r - 2h > 0 and h > 0.
double schrodinger_residual(const CoulombParams& p, double r, double h);

}  // namespace tra
