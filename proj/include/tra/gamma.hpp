#pragma once

#include <array>

#include "tra/scalar.hpp"

namespace tra {

/// Lanczos parameters for the complex gamma function.
struct GammaConfig {
  double lanczos_g;
  std::array<double, 9> coefficients;
};

/// The g = 7, n = 9 Lanczos set (relative error ~1e-15 on Re(w) >= 0.5).
const GammaConfig& default_gamma_config();

/// Principal Γ(w). Uses the reflection formula for Re(w) < 0.5.
///
/// Throws std::domain_error at the poles w = 0, -1, -2, ... and
/// std::range_error when the result overflows (Re(w) beyond ~171).
Complex gamma_complex(Complex w, const GammaConfig& config = default_gamma_config());

/// |Γ(l + 1 + iσ)|, which equals |Γ(l + 1 - iσ)|.
double abs_gamma_shifted(int l, double sigma);

}  // namespace tra
