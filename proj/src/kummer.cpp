#include "tra/kummer.hpp"

#include <cmath>
#include <stdexcept>

namespace tra {

namespace {

constexpr int kConsecutiveSmallTerms = 3;

void validate(const HypergeometricParams& p, double tol, int max_terms) {
  if (!is_finite(p.a) || !is_finite(p.b) || !is_finite(p.z)) {
    throw std::domain_error("hyp1f1: non-finite parameter");
  }
  if (is_nonpositive_integer(p.b)) throw std::domain_error("hyp1f1: b is a non-positive integer");
  if (!(tol >= 1e-25)) throw std::domain_error("hyp1f1: tol must be at least 1e-25");
  if (max_terms < 1 || max_terms > kOracleMaxTerms) {
    throw std::domain_error("hyp1f1: max_terms must lie in [1, 10000]");
  }
}

}  // namespace

bool is_nonpositive_integer(Complex b) {
  return b.imag() == 0.0 && b.real() <= 0.0 && std::nearbyint(b.real()) == b.real();
}

SeriesResult hyp1f1_series(const HypergeometricParams& p, double tol, int max_terms) {
  validate(p, tol, max_terms);
  const ComplexDD a(p.a);
  const ComplexDD b(p.b);
  const ComplexDD z(p.z);

  ComplexDD term(Complex{1.0, 0.0});
  ComplexDD sum = term;
  SeriesResult result;
  int small_run = 0;
  int n = 0;
  for (; n < max_terms && small_run < kConsecutiveSmallTerms; ++n) {
    const ComplexDD shift(Complex{static_cast<double>(n), 0.0});
    const ComplexDD next_n(Complex{n + 1.0, 0.0});
    term = term * (a + shift) * z / ((b + shift) * next_n);
    sum = sum + term;
    result.last_term_magnitude = term.magnitude();
    if (result.last_term_magnitude <= tol * sum.magnitude()) {
      ++small_run;
    } else {
      small_run = 0;
    }
  }
  result.value = sum.value();
  result.terms_used = n + 1;
  result.converged = small_run >= kConsecutiveSmallTerms;
  return result;
}

SeriesResult hyp1f1_oracle(const HypergeometricParams& p, double tol, int max_terms) {
  validate(p, tol, max_terms);
  if (p.z.real() >= 0.0) return hyp1f1_series(p, tol, max_terms);
  SeriesResult r = hyp1f1_series({p.b - p.a, p.b, -p.z}, tol, max_terms);
  const Complex scale = std::exp(p.z);
  r.value *= scale;
  r.last_term_magnitude *= std::abs(scale);
  return r;
}

double kummer_transform_residual(const HypergeometricParams& p) {
  const SeriesResult direct = hyp1f1_series(p);
  const SeriesResult flipped = hyp1f1_series({p.b - p.a, p.b, -p.z});
  if (!direct.converged || !flipped.converged) {
    throw std::runtime_error("kummer_transform_residual: series did not converge");
  }
  const Complex transformed = std::exp(p.z) * flipped.value;
  return std::abs(direct.value - transformed) / std::abs(direct.value);
}

}  // namespace tra
