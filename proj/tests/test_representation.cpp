#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tra/bessel.hpp"
#include "tra/gamma.hpp"
#include "tra/kummer.hpp"
#include "tra/representation.hpp"

using namespace tra;

namespace {

constexpr Complex kI{0.0, 1.0};

double oracle(double a, double b, double x) { return hyp1f1_oracle({a, b, x}).value.real(); }

// 1F1(a; 2a; z) = Γ(a+½) (z/4i)^{½-a} e^{z/2} J_{a-½}(z/2i)
Complex half_b_closed_form(double a, Complex z) {
  return gamma_complex(a + 0.5) * std::pow(z / (4.0 * kI), 0.5 - a) * std::exp(0.5 * z) *
         bessel_j(BesselOrder(a - 0.5), z / (2.0 * kI));
}

// Paper form of the backward coefficient, evaluated literally.
double literal_backward(int n, double b) {
  const double d = 2.0 * n + b - 3.0;
  return 0.5 * (d - (b - 1.0) * (b - 1.0) / d);
}

double literal_forward(int n, double b) {
  const double d = 2.0 * n + b + 1.0;
  return 0.5 * (d - (b - 1.0) * (b - 1.0) / d);
}

}  // namespace

TEST_CASE("P coefficients: examples") {
  const auto zero = p_coefficients(3.7, 0.0, 5);
  REQUIRE(zero.values().size() == 6);
  CHECK(zero[0] == Complex{1.0, 0.0});
  for (int n = 1; n <= 5; ++n) CHECK(zero[n] == Complex{0.0, 0.0});

  const Complex y{0.3, -2.6};
  const auto one = p_coefficients(3.7, y, 1);
  CHECK(std::abs(one[1] - y * (3.7 + 1.0) / (2.0 * 3.7)) <= 1e-15 * std::abs(one[1]));
  CHECK(p_forward_coefficient(0, 3.7) == doctest::Approx(2.0 * 3.7 / 4.7).epsilon(1e-15));

  const auto coulomb = p_coefficients(2.0, 4.0 * 0.8, 30);
  for (const Complex& v : coulomb.values()) CHECK(v.imag() == 0.0);
}

TEST_CASE("P coefficients: domain") {
  CHECK_THROWS_AS(p_coefficients(1.0, 1.0, 5), std::domain_error);
  CHECK_THROWS_AS(p_coefficients(0.0, 1.0, 5), std::domain_error);
  CHECK_THROWS_AS(p_coefficients(-2.0, 1.0, 5), std::domain_error);
  CHECK_THROWS_AS(p_coefficients(2.0, 1.0, 501), std::domain_error);
  CHECK_THROWS_AS(p_coefficients(2.0, 1.0, -1), std::domain_error);
  // b = 3 zeroes the n = 0 backward denominator; that term multiplies P_{-1} and is skipped.
  const auto three = p_coefficients(3.0, Complex{0.0, 2.0}, 20);
  for (const Complex& v : three.values()) CHECK(is_finite(v));
  CHECK(p_backward_coefficient(0, 3.0) == 0.0);
}

TEST_CASE("P coefficients: Kronecker delta at y = 0") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> ub(0.0, 10.0);
  for (int i = 0; i < 50; ++i) {
    const double b = ub(rng);
    if (b == 1.0 || b == 0.0) continue;
    const auto p = p_coefficients(b, 0.0, 60);
    CHECK(p[0] == Complex{1.0, 0.0});
    for (int n = 1; n <= 60; ++n) CHECK(p[n] == Complex{0.0, 0.0});
  }
  CHECK(p_backward_coefficient(1, 7.25) == 0.0);
}

TEST_CASE("P coefficients: recursion residual with the literal coefficients") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> ub(1.05, 10.0);
  std::uniform_real_distribution<double> ua(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double b = ub(rng);
    const Complex y = 2.0 * kI * (b - 2.0 * ua(rng));
    const auto p = p_coefficients(b, y, 40);
    for (int n = 1; n < 40; ++n) {
      const Complex lhs = y * p[n];
      const Complex fwd = literal_forward(n, b) * p[n + 1];
      const Complex bwd = literal_backward(n, b) * p[n - 1];
      const double scale = std::max({std::abs(lhs), std::abs(fwd), std::abs(bwd)});
      CHECK(std::abs(lhs - fwd - bwd) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("P coefficients: imaginary y gives P_n / i^n real") {
  const auto p = p_coefficients(3.7, 2.0 * kI * (3.7 - 5.0), 40);
  Complex rotation = 1.0;
  for (int n = 0; n <= 40; ++n) {
    const Complex q = p[n] * rotation;
    CHECK(std::abs(q.imag()) <= 1e-13 * std::abs(q));
    rotation *= -kI;
  }
}

TEST_CASE("P coefficients: extension reuses the prefix") {
  const Complex y{1.5, -0.5};
  const auto short_seq = p_coefficients(4.2, y, 10);
  const auto longer = short_seq.extended(30);
  const auto fresh = p_coefficients(4.2, y, 30);
  CHECK(longer.n_max() == 30);
  CHECK(longer.values() == fresh.values());
  CHECK(short_seq.n_max() == 10);
  CHECK(short_seq.extended(5).n_max() == 10);
}

TEST_CASE("R coefficients") {
  for (double b : {0.5, 2.0, 3.7}) {
    for (Complex mu : {Complex{-1.3, 0.0}, Complex{0.7, 0.2}}) {
      const auto r = r_coefficients(b, mu, 30);
      CHECK(r[0] == Complex{1.0, 0.0});
      CHECK(r[1] == Complex{0.0, 0.0});
      CHECK(std::abs(r[2] - b / (8.0 * mu * mu)) <= 1e-15 * std::abs(r[2]));
      for (int n = 2; n < 30; ++n) {
        const Complex lhs = 4.0 * mu * mu * (n + 1.0) * r[n + 1];
        const Complex rhs = (n + b - 1.0) * r[n - 1] - 0.5 * r[n - 2];
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), std::abs(rhs)));
      }
    }
  }
  CHECK(r_coefficients(3.7, -1.3, 2)[2].real() == doctest::Approx(0.273669).epsilon(1e-6));
  CHECK_THROWS_AS(r_coefficients(3.7, 0.0, 5), std::domain_error);
}

TEST_CASE("rep18 against 40-digit partial sums") {
  // Σ_{n=0}^{20} at a = 2.5, b = 3.7, evaluated with 40-digit arithmetic.
  const double reference[][2] = {{1.0, 2.0097194706864701027},
                                 {5.0, 46.326312197242657846},
                                 {8.0, 610.73413807999163605},
                                 {9.0, 1480.1106695011799251},
                                 {10.0, 3621.4133681294104014}};
  for (const auto& [x, want] : reference) {
    CAPTURE(x);
    const auto r = eval_rep18({2.5, 3.7, x}, 20);
    CHECK(r.terms_used == 21);
    CHECK(std::abs(r.value.real() - want) <= 5e-15 * want);
    CHECK(std::abs(r.value.imag()) <= 1e-15 * want);
  }
  CHECK(std::abs(eval_rep18({2.5, 3.7, 1.0}, 20).value.real() - 2.009719470686) <= 5e-13);
}

TEST_CASE("rep18 collapses to one term when b = 2a") {
  for (double a : {0.75, 1.85, 3.3}) {
    for (Complex z : {Complex{2.0, 0.0}, Complex{-3.5, 1.0}, Complex{0.5, -4.0}}) {
      const auto r = eval_rep18({a, 2.0 * a, z}, 10);
      const Complex closed = half_b_closed_form(a, z);
      CHECK(std::abs(r.value - closed) <= 1e-12 * std::abs(closed));
      const Complex exact = hyp1f1_oracle({a, 2.0 * a, z}).value;
      CHECK(std::abs(r.value - exact) <= 1e-12 * std::abs(exact));
    }
  }
}

TEST_CASE("rep18 domain") {
  CHECK_THROWS_AS(eval_rep18({2.5, 3.7, 0.0}, 20), std::domain_error);
  CHECK_THROWS_AS(eval_rep18({2.5, 1.0, 1.0}, 20), std::domain_error);
  CHECK_THROWS_AS(eval_rep18({2.5, 0.5, 1.0}, 20), std::domain_error);
  CHECK_THROWS_AS(eval_rep18({2.5, Complex{3.7, 0.1}, 1.0}, 20), std::domain_error);
  CHECK_THROWS_AS(eval_rep18({2.5, 3.7, 1.0}, 201), std::domain_error);
  const auto wrong = p_coefficients(3.7, 1.0, 20);
  CHECK_THROWS_AS(eval_rep18({2.5, 3.7, 1.0}, wrong, 20), std::invalid_argument);
}

TEST_CASE("rep18 with cached coefficients matches a fresh evaluation") {
  const HypergeometricParams p{-1.25, 4.5, 6.0};
  const auto coeffs = p_coefficients(4.5, 2.0 * kI * (4.5 + 2.5), 10);
  const auto cached = eval_rep18(p, coeffs, 30);
  const auto fresh = eval_rep18(p, 30);
  CHECK(cached.value == fresh.value);
  CHECK(cached.converged == fresh.converged);
}

TEST_CASE("rep18 real path") {
  CHECK(std::abs(eval_rep18_real_path(2.5, 3.7, 1.0, 20) - 2.009719470686) <= 5e-13);
  CHECK(std::abs(eval_rep18_real_path(2.5, 3.7, 10.0, 20) - 3621.4133681294104014) <= 5e-15 * 3621.41);

  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> ua(-5.0, 5.0);
  std::uniform_real_distribution<double> ub(1.05, 10.0);
  std::uniform_real_distribution<double> ux(0.05, 10.0);
  for (int i = 0; i < 50; ++i) {
    const double a = ua(rng), b = ub(rng), x = ux(rng);
    const auto complex_path = eval_rep18({a, b, x}, 40);
    const double real_path = eval_rep18_real_path(a, b, x, 40);
    const double scale = std::abs(real_path);
    CHECK(std::abs(complex_path.value.real() - real_path) <= 1e-12 * scale);
    CHECK(std::abs(complex_path.value.imag()) <= 1e-12 * scale);
  }
  CHECK_THROWS_AS(eval_rep18_real_path(2.5, 3.7, 0.0, 20), std::domain_error);
  CHECK_THROWS_AS(eval_rep18_real_path(2.5, 1.0, 1.0, 20), std::domain_error);
}

TEST_CASE("rep19 reference values at N = 20") {
  CHECK(std::abs(eval_rep19({2.5, 3.7, 1.0}, 20).value.real() - 2.009719470686) <= 5e-13);
  CHECK(std::abs(eval_rep19({2.5, 3.7, 2.0}, 20).value.real() - 4.205949449938) <= 5e-13);
  // 40-digit partial sums of the same truncation
  CHECK(eval_rep19({2.5, 3.7, 8.0}, 20).value.real() ==
        doctest::Approx(610.73413801975242399).epsilon(5e-15));
  CHECK(eval_rep19({2.5, 3.7, 10.0}, 20).value.real() ==
        doctest::Approx(3621.4133482883085002).epsilon(5e-15));
  CHECK(std::abs(eval_rep19({2.5, 3.7, 10.0}, 20).value.real() - 3621.413348288315) <= 1e-14 * 3621.4);
  CHECK(std::abs(eval_rep19({2.5, 3.7, 8.0}, 20).value.real() - 610.734138019753) <= 1e-14 * 610.7);
}

TEST_CASE("rep19 domain") {
  CHECK_THROWS_AS(eval_rep19({2.5, 5.0, 1.0}, 20), std::domain_error);
  CHECK_THROWS_AS(eval_rep19({2.5, 3.7, 0.0}, 20), std::domain_error);
  CHECK_THROWS_AS(eval_rep19({2.5, -1.0, 1.0}, 20), std::domain_error);
}

TEST_CASE("relative deviation") {
  CHECK(std::abs(relative_deviation(2.5, 3.7, 1.0, 60, Representation::rep18)) <= 1e-14);

  std::vector<double> xs;
  for (int i = 1; i <= 100; ++i) xs.push_back(0.1 * i);
  for (double x : xs) {
    CAPTURE(x);
    const double d3 = std::abs(relative_deviation(3.0, 2.0, x, 3, Representation::rep18));
    const double d15 = std::abs(relative_deviation(3.0, 2.0, x, 15, Representation::rep18));
    CHECK(d15 < d3);
  }
  for (double x : xs) {
    if (x < 2.0) continue;
    CAPTURE(x);
    const double d18 = std::abs(relative_deviation(2.5, 3.7, x, 5, Representation::rep18));
    const double d19 = std::abs(relative_deviation(2.5, 3.7, x, 5, Representation::rep19));
    CHECK(d18 <= d19);
  }
  // signed: a truncated positive series underestimates, so Δ > 0
  CHECK(relative_deviation(2.5, 3.7, 8.0, 5, Representation::rep18) > 0.0);
}

TEST_CASE("eq20 residual") {
  const double r40 = eq20_residual(2.5, 3.7, 3.0, 40);
  const double r5 = eq20_residual(2.5, 3.7, 3.0, 5);
  CHECK(r40 <= 1e-10);
  CHECK(r5 > r40);
  CHECK(eq20_residual(1.0, 3.7, 3.0, 40) <= 1e-10);
  CHECK_THROWS_AS(eq20_residual(2.5, 5.0, 3.0, 40), std::domain_error);
  CHECK_THROWS_AS(eq20_residual(2.5, 3.7, 0.0, 40), std::domain_error);
}

TEST_CASE("oracle equivalence on a random sample") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> ua(-5.0, 5.0);
  std::uniform_real_distribution<double> ub(1.0, 10.0);
  std::uniform_real_distribution<double> ux(0.0, 10.0);
  std::uniform_real_distribution<double> us(-2.0, 2.0);
  std::uniform_int_distribution<int> ul(0, 3);
  for (int i = 0; i < 60; ++i) {
    const Complex a = i % 2 ? Complex{ua(rng), 0.0} : Complex{ul(rng) + 1.0, us(rng)};
    const double b = std::nextafter(ub(rng), 11.0);
    const double x = std::nextafter(ux(rng), 11.0);
    const Complex exact = hyp1f1_oracle({a, b, x}).value;
    const auto r = eval_rep18({a, b, x}, 40);
    CHECK(std::abs(r.value - exact) <= 1e-10 * std::abs(exact));
  }
}

TEST_CASE("truncation error decays with N") {
  const double params[][3] = {{2.5, 3.7, 5.0}, {3.0, 2.0, 8.0}, {-1.5, 4.2, 6.0}, {0.3, 1.4, 9.0}};
  for (const auto& [a, b, x] : params) {
    CAPTURE(a);
    const PCoefficients coeffs = p_coefficients(b, 2.0 * kI * (b - 2.0 * a), 60);
    auto value = [&](int n) { return eval_rep18({a, b, x}, coeffs, n).value; };
    const double floor = 1e-12 * std::abs(value(60));
    double previous = std::abs(value(5) - value(10));
    for (int n = 6; n <= 40; ++n) {
      const double diff = std::abs(value(n) - value(n + 5));
      if (diff < floor) break;
      CHECK(diff < previous);
      previous = diff;
    }
  }
}

TEST_CASE("rep18 beats rep19 at N = 20 for x = 5..10") {
  for (int xi = 5; xi <= 10; ++xi) {
    const double x = xi;
    const double exact = oracle(2.5, 3.7, x);
    const double e18 = std::abs(eval_rep18({2.5, 3.7, x}, 20).value.real() - exact);
    const double e19 = std::abs(eval_rep19({2.5, 3.7, x}, 20).value.real() - exact);
    CAPTURE(x);
    CHECK(e18 < e19);
  }
}

TEST_CASE("convergence flag") {
  CHECK(eval_rep18({2.5, 3.7, 1.0}, 40).converged);
  CHECK_FALSE(eval_rep18({2.5, 3.7, 10.0}, 5).converged);
  CHECK_FALSE(eval_rep19({2.5, 3.7, 10.0}, 20).converged);
}
