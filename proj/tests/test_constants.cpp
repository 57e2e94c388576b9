#include "stechkin/constants.hpp"
#include "stechkin/trig.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace stechkin;

namespace {

double to_double(const Rational& q) { return static_cast<double>(q); }

// (1 - 2^-s) zeta(s) for even s, from zeta(2m) = |B_2m| (2 pi)^{2m} / (2 (2m)!).
double lambda_even(int s) {
  static const double bernoulli_abs[] = {1.0, 1.0 / 6, 1.0 / 30, 1.0 / 42, 1.0 / 30, 5.0 / 66, 691.0 / 2730, 7.0 / 6};
  const int m = s / 2;
  const double zeta = bernoulli_abs[m] * std::pow(kTwoPi, s) / (2.0 * std::tgamma(s + 1.0));
  return (1.0 - std::pow(2.0, -s)) * zeta;
}

}  // namespace

TEST_CASE("gamma star") {
  CHECK(gamma_star(1) == Rational(1));
  CHECK(gamma_star(2) == Rational(1, 2));
  CHECK(gamma_star(4) == Rational(1, 6));
  CHECK(gamma_star(6) == Rational(1, 20));
  for (int k = 1; k <= 20; ++k) CHECK(gamma_star(2 * k - 1) == 2 * gamma_star(2 * k));
  CHECK(gamma_star_value(4) == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(gamma_star_asymptotic(4) == doctest::Approx(2.0 / 16));
  // C(r, r/2) ~ 2^r sqrt(2 / (pi r)), so the ratio tends to sqrt(pi/2).
  CHECK(gamma_star_value(400) / gamma_star_asymptotic(400) == doctest::Approx(std::sqrt(kPi / 2)).epsilon(1e-3));
}

TEST_CASE("exact binomials up to r = 400") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  for (int k : {0, 1, 57, 199, 200, 344}) {
    CHECK(binomial(400, k) == binomial(399, k - 1) + binomial(399, k));
    CHECK(binomial(400, k) == binomial(400, 400 - k));
  }
  // log10 C(400, 200) = 119.03...
  const std::string big = binomial(400, 200).str();
  CHECK(big.size() == 120);
  CHECK(central_ratio(3, 2) == Rational(binomial(6, 5), binomial(6, 3)));
}

TEST_CASE("Favard constants against zeta closed forms") {
  CHECK(favard(0).value == doctest::Approx(1.0).epsilon(1e-12));
  const double closed[] = {1.0,
                           kPi / 2,
                           kPi * kPi / 8,
                           std::pow(kPi, 3) / 24,
                           5 * std::pow(kPi, 4) / 384,
                           std::pow(kPi, 5) / 240,
                           61 * std::pow(kPi, 6) / 46080};
  for (int r = 0; r <= 6; ++r) {
    const auto f = favard(r, 1e-13);
    CAPTURE(r);
    CHECK(f.converged);
    CHECK(std::abs(f.value - closed[r]) <= 1e-10);
    if (r % 2 == 1) CHECK(std::abs(f.value - 4.0 / kPi * lambda_even(r + 1)) <= 1e-10);
  }
  for (int m = 0; m <= 6; ++m) CHECK(favard_even_from_euler(m) == doctest::Approx(favard(2 * m, 1e-13).value).epsilon(1e-12));
}

TEST_CASE("property: Favard constants interleave around 4/pi") {
  std::vector<double> F;
  for (int r = 0; r <= 12; ++r) F.push_back(favard(r).value);
  for (int r = 0; r + 2 <= 12; r += 2) CHECK(F[r] < F[r + 2]);
  for (int r = 1; r + 2 <= 12; r += 2) CHECK(F[r + 2] < F[r]);
  for (int r = 0; r <= 12; ++r) CHECK(((r % 2 == 0) == (F[r] < 4 / kPi)));
}

TEST_CASE("mu squared") {
  CHECK(mu_squared(1) == doctest::Approx(4 / (kPi * kPi)).epsilon(1e-15));
  CHECK(mu_squared(1) == doctest::Approx(0.4052847).epsilon(1e-7));
  for (int k = 1; k <= 30; ++k) {
    const auto rhs = one_minus_mu_squared_integral(k);
    CAPTURE(k);
    CHECK(rhs.converged);
    CHECK(std::abs(1.0 - mu_squared(k) - rhs.value) <= 1e-9);
  }
  double prev = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double mu2 = mu_squared(k), gap = 1.0 - mu2, s = std::sqrt(2.0 * k);
    CAPTURE(k);
    CHECK(mu2 > prev);
    CHECK(mu2 < 1.0);
    CHECK(2.0 / (3.0 * s) < gap);
    CHECK(gap < 5.0 / (4.0 * s));
    const double w = wallis_ratio(k);
    CHECK(std::sqrt(kPi / 2) * s <= w);
    CHECK(w <= std::sqrt(kPi / 2) * std::sqrt(2.0 * k + 1));
    prev = mu2;
  }
  CHECK_THROWS(mu_squared(0));
}

TEST_CASE("t cos^m t integrals") {
  CHECK(t_cos_power_integral(0).value == doctest::Approx(kPi * kPi / 8).epsilon(1e-14));
  CHECK(t_cos_power_integral(1).value == doctest::Approx(kPi / 2 - 1).epsilon(1e-14));
  // The recurrence branch against raw quadrature.
  for (int m : {81, 100, 160}) {
    const double raw = integrate([m](double t) { return t * std::pow(std::cos(t), m); }, 0.0, kPi / 2, 1e-15).value;
    CHECK(t_cos_power_integral(m).value == doctest::Approx(raw).epsilon(1e-11));
  }
}

TEST_CASE("secant expansion") {
  for (double rho : {0.1, 0.5}) {
    CHECK(std::abs(secant_series(rho, 60) / secant_bound(rho) - 1.0) <= 1e-6);
  }
  CHECK(std::abs(secant_series(0.9, 70) / secant_bound(0.9) - 1.0) <= 1e-6);
  // At rho = 0.9 the terms decay like 0.81^m: sixty of them leave about 2.7e-6.
  const double rel60 = std::abs(secant_series(0.9, 60) / secant_bound(0.9) - 1.0);
  CHECK(rel60 > 1e-6);
  CHECK(rel60 < 5e-6);
  CHECK(secant_bound(0.5) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS(secant_bound(1.0));
}

TEST_CASE("c_alpha") {
  CHECK(c_alpha(2.0).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(c_alpha(1.5).value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(c_alpha(4.0 / 3).value - 2.61) <= 1e-2);
  CHECK(std::abs(c_alpha(1.25).value - 3.23) <= 1e-2);
  for (int i = 1; i <= 100; ++i) {
    const double alpha = 1.0 + 9.0 * i / 100.0;
    const auto c = c_alpha(alpha);
    CHECK(c.value < c.comparator);
    CHECK(c.comparator == doctest::Approx(4.0 / kPi / (1.0 - 1.0 / (alpha * alpha))));
  }
  CHECK_THROWS_AS(c_alpha(1.0), std::invalid_argument);
  CHECK_THROWS_AS(c_alpha(0.5), std::invalid_argument);
}

TEST_CASE("composite de la Vallee Poussin constants") {
  const double sec = 1.0 / std::cos(9 * kPi / 32);
  const double k4 = 4 / (kPi * kPi);
  const auto a = composite_vp_constant(2.0, 8.0 / 9, 1.0, LebesgueFactor::LogBound);
  const auto b = composite_vp_constant(2.0, 8.0 / 9, 1.0, LebesgueFactor::IntegerLogBound);
  const auto c = composite_vp_constant(2.0, 8.0 / 9, 1.0, LebesgueFactor::ExactEll, 1e-8);
  CHECK(a.value == doctest::Approx(sec * (2 + k4 * std::log(18.0))).epsilon(1e-13));
  CHECK(b.value == doctest::Approx(sec * (2 + k4 * std::log(17.0))).epsilon(1e-13));
  CHECK(std::abs(a.value - 4.999144) <= 1e-6);
  CHECK(std::abs(b.value - 4.962628) <= 1e-6);
  CHECK(std::abs(c.value - 4.946034) <= 1e-6);
  CHECK(c.value == doctest::Approx(sec * (1 + lebesgue_constant(8).value)).epsilon(1e-8));
  CHECK_THROWS(composite_vp_constant(0.5, 0.5, 1.0, LebesgueFactor::LogBound));
  CHECK_THROWS(composite_vp_constant(2.0, 1.0, 1.0, LebesgueFactor::LogBound));
}

TEST_CASE("small-r table") {
  CHECK(small_r_constant(1, 1.0) == doctest::Approx(5.0 / 4).epsilon(1e-14));
  CHECK(small_r_constant(1, 2.0) == doctest::Approx(17.0 / 16).epsilon(1e-14));
  CHECK(small_r_constant(1, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(small_r_constant(2, 1.0) == doctest::Approx(517.0 / 192).epsilon(1e-12));
  CHECK(small_r_constant(2, 2.0) == doctest::Approx(3397.0 / 3072).epsilon(1e-12));
  CHECK(std::abs(small_r_constant(3, 2.0) - 1.4552) <= 1e-4);
  CHECK(small_r_constant(3, 2.0) < 1.5);
}

TEST_CASE("pi/n constants stay below the explicit comparator") {
  for (int r = 2; r <= 400; r += 2) {
    CAPTURE(r);
    CHECK(vp_pi_over_n_constant(r) <= pi_over_n_comparator(r));
  }
  CHECK(pi_over_n_comparator(4) == doctest::Approx(2 * 2 * std::log(4.0) + 24));
}

TEST_CASE("lower-bound constants") {
  CHECK(lower_bound_constant(1) == Rational(1, 2));
  CHECK(lower_bound_constant(2) == Rational(1));
  CHECK(lower_bound_constant(3) == Rational(3, 4));
  for (int r = 1; r <= 40; ++r) CHECK(gamma_star(r - 1) / 2 == lower_bound_constant(r) * gamma_star(r));
  // Korneichuk: 1 - 1/(2n) <= K_{n,1}(pi/n) sits above c'_1 gamma*_1 = 1/2 for n >= 1.
  CHECK(to_double(lower_bound_constant(1) * gamma_star(1)) <= 1.0 - 1.0 / 2);
}

TEST_CASE("Chernykh constants") {
  CHECK(chernykh_constant(1) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(chernykh_constant(2) == doctest::Approx(1 / std::sqrt(6.0)));
  for (int r = 1; r <= 30; ++r) {
    const double q = chernykh_constant(r) / chernykh_asymptotic(r);
    CHECK(q > 0.5);
    CHECK(q < 2.0);
  }
  CHECK(conjectured_lp_order(4, 2.0) == doctest::Approx(std::pow(4.0, 0.25) / 16));
}

TEST_CASE("named constants carry anchors and honest error estimates") {
  const auto all = named_constants(1e-8);
  CHECK(all.size() >= 10);
  for (const auto& c : all) {
    CAPTURE(c.name);
    CHECK(!c.anchor.empty());
    CHECK(c.err_estimate <= 1e-8);
    CHECK(std::isfinite(c.value));
  }
}
