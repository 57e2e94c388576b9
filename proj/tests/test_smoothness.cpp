#include "stechkin/constants.hpp"
#include "stechkin/smoothness.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace stechkin;
using test_support::Rng;

namespace {

const ModulusOptions kFast{GridSpec{512, 20}, 64, 20};

double binom(int n, int k) { return static_cast<double>(binomial(n, k)); }

std::vector<PeriodicFunction> small_corpus(Rng& rng) {
  return {PeriodicFunction::cos_n(3), PeriodicFunction::smoothed_step(0.2), PeriodicFunction::favard_sign(2),
          PeriodicFunction::trig_poly(rng.trig_poly(5)), PeriodicFunction::step().shifted(0.3)};
}

}  // namespace

TEST_CASE("difference examples") {
  for (int k = 1; k <= 4; ++k) {
    for (double t : {0.1, 0.4, 1.3}) {
      const DifferenceSpec spec{2 * k, t, DifferenceFlavor::Central};
      CHECK(difference(PeriodicFunction::cos_n(3), spec, 0.0) ==
            doctest::Approx(std::pow(4.0, k) * std::pow(std::sin(1.5 * t), 2 * k)).epsilon(1e-12));
    }
  }
  const auto f = PeriodicFunction::smoothed_step(0.3);
  for (double x : {-2.0, -0.1, 0.05, 2.9}) {
    CHECK(difference(f, DifferenceSpec{1, 0.2}, x) == doctest::Approx(f(x) - f(x + 0.2)));
  }
  for (int r = 1; r <= 8; ++r) CHECK(difference(PeriodicFunction::constant(2.5), DifferenceSpec{r, 0.7}, 1.1) == doctest::Approx(0.0).scale(1));

  CHECK_THROWS_AS(difference(f, DifferenceSpec{3, 0.1, DifferenceFlavor::Central}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(difference(f, DifferenceSpec{0, 0.1}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(difference(f, DifferenceSpec{2, -0.1}, 0.0), std::invalid_argument);
  CHECK(difference(f, DifferenceSpec{2, 0.0}, 0.4) == 0.0);
}

TEST_CASE("difference multiplier matches pointwise differences on cosines") {
  for (int j = 1; j <= 6; ++j) {
    for (int r = 1; r <= 6; ++r) {
      const DifferenceSpec spec{r, 0.37};
      const auto m = difference_multiplier(spec, j);
      for (double x : {0.0, 0.8, -2.5}) {
        const double expect = (m * std::polar(1.0, j * x)).real();
        CHECK(difference(PeriodicFunction::cos_n(j), spec, x) == doctest::Approx(expect).scale(1).epsilon(1e-12));
      }
    }
  }
  CHECK(difference_multiplier(DifferenceSpec{4, 0.3, DifferenceFlavor::Central}, 2.0).real() ==
        doctest::Approx(16.0 * std::pow(std::sin(0.3), 4)).epsilon(1e-14));
}

TEST_CASE("property: central and forward differences agree after recentring") {
  Rng rng(31);
  const std::vector<PeriodicFunction> fs = {PeriodicFunction::cos_n(4), PeriodicFunction::smoothed_step(0.4),
                                            PeriodicFunction::trig_poly(rng.trig_poly(7))};
  for (const auto& f : fs) {
    for (int trial = 0; trial < 50; ++trial) {
      const int k = rng.integer(1, 4);
      const double t = rng.uniform(0.01, 1.0), x = rng.uniform(-kPi, kPi);
      const double central = difference(f, DifferenceSpec{2 * k, t, DifferenceFlavor::Central}, x);
      const double forward = difference(f, DifferenceSpec{2 * k, t}, x - k * t);
      CHECK(central == doctest::Approx((k % 2 ? -1.0 : 1.0) * forward).scale(1).epsilon(1e-12));
    }
  }
}

TEST_CASE("modulus of cos nx in closed form") {
  for (int n : {4, 8}) {
    for (double alpha : {0.25, 0.5, 1.0}) {
      for (int r = 1; r <= 8; ++r) {
        const auto m = modulus(PeriodicFunction::cos_n(n), r, alpha * kPi / n);
        CAPTURE(n);
        CAPTURE(alpha);
        CAPTURE(r);
        CHECK(std::abs(m.value - std::pow(2.0 * std::sin(alpha * kPi / 2.0), r)) <= 1e-6);
        CHECK(m.argmax_h > 0.0);
        CHECK(m.argmax_h <= alpha * kPi / n);
        CHECK(m.flavor == ModulusFlavor::Classic);
      }
    }
  }
}

TEST_CASE("modulus saturates at 2^r once delta passes pi/n") {
  const int n = 5;
  for (int r = 1; r <= 6; ++r) {
    // Oracle: dense h-grid of the closed form 2^r |sin(nh/2)|^r on (0, 2 pi / n].
    double oracle = 0.0;
    for (int m = 1; m <= 100000; ++m) oracle = std::max(oracle, std::pow(2.0 * std::abs(std::sin(n * (kTwoPi / n) * m / 1e5 / 2)), r));
    const auto v = modulus(PeriodicFunction::cos_n(n), r, kTwoPi / n).value;
    CHECK(v == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(v == doctest::Approx(std::pow(2.0, r)).epsilon(1e-12));
  }
}

TEST_CASE("modulus of the step is a central binomial coefficient") {
  for (int r = 1; r <= 6; ++r) {
    const double delta = 0.9 * kPi / r;
    CAPTURE(r);
    CHECK(modulus(PeriodicFunction::step(), r, delta).value == doctest::Approx(binom(r - 1, (r - 1) / 2)).epsilon(1e-12));
  }
}

TEST_CASE("property: monotone, order reduction and boundedness") {
  Rng rng(32);
  for (const auto& f : small_corpus(rng)) {
    const double fsup = sup_norm(f, kFast.grid);
    CAPTURE(f.label());
    for (int r = 1; r <= 8; ++r) {
      double prev = 0.0;
      for (double delta : {0.1, 0.3, 0.7, 1.5, 3.0}) {
        const double v = modulus(f, r, delta, kInfinity, kFast).value;
        CHECK(prev <= v + 1e-10);
        CHECK(v <= std::pow(2.0, r) * fsup + 1e-12);
        if (r % 2 == 0) CHECK(v <= 2.0 * modulus(f, r - 1, delta, kInfinity, kFast).value + 1e-10);
        prev = v;
      }
    }
  }
}

TEST_CASE("modulus in Lp") {
  // ||Delta_h cos x||_2 = 2 sin(h/2) sqrt(pi), maximised at h = delta.
  const auto m = modulus(PeriodicFunction::cos_n(1), 1, 1.0, 2.0);
  CHECK(m.value == doctest::Approx(2.0 * std::sin(0.5) * std::sqrt(kPi)).epsilon(1e-9));
  CHECK(m.p == 2.0);
  CHECK_THROWS(modulus(PeriodicFunction::cos_n(1), 0, 1.0));
  CHECK_THROWS(modulus(PeriodicFunction::cos_n(1), 1, 0.0));
  CHECK_THROWS(modulus(PeriodicFunction::cos_n(1), 1, 7.0));
}

TEST_CASE("smoothed modulus of cos nx") {
  for (int n : {4, 8}) {
    for (int k = 1; k <= 4; ++k) {
      const auto m = smoothed_modulus(PeriodicFunction::cos_n(n), k, kPi / n);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(m.flavor == ModulusFlavor::Smoothed);
      CHECK(m.value * gamma_star_value(2 * k) == doctest::Approx(1.0 - mu_squared(k)).epsilon(1e-8));
    }
  }
  CHECK(smoothed_modulus(PeriodicFunction::constant(3.0), 2, 0.5).value == doctest::Approx(0.0).scale(1));
}

TEST_CASE("property: smoothed modulus never exceeds the classic one") {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = PeriodicFunction::trig_poly(rng.trig_poly(rng.integer(1, 8)));
    const int k = rng.integer(1, 3);
    const double h = rng.uniform(0.05, 1.5);
    CHECK(smoothed_modulus(f, k, h, kFast.grid).value <= modulus(f, 2 * k, h, kInfinity, kFast).value + 1e-10);
  }
}

TEST_CASE("kernels have unit mass") {
  for (double h : {0.1, 1.0}) {
    CHECK(integrate([h](double t) { return hat_kernel(h, t); }, -h, h, 1e-13).value == doctest::Approx(1.0));
    for (int order : {2, 4, 6, 8}) {
      const double s = h / (order / 2);
      const double half = order * s / 2;
      CHECK(integrate([&](double t) { return bspline_kernel(order, s, t); }, -half, half, 1e-13).value ==
            doctest::Approx(1.0).epsilon(1e-11));
    }
  }
  CHECK(hat_kernel(1.0, 0.0) == 1.0);
  CHECK(hat_kernel(1.0, 1.5) == 0.0);
  CHECK(bspline_kernel(2, 1.0, 0.5) == doctest::Approx(hat_kernel(1.0, 0.5)));
}

TEST_CASE("Steklov averages") {
  const auto c = steklov(PeriodicFunction::constant(1.7), 0.4);
  for (double x : {0.0, 2.0}) CHECK(c(x) == doctest::Approx(1.7).epsilon(1e-13));

  for (int n : {1, 3, 7}) {
    const double h = 0.3;
    const double sinc = std::sin(n * h / 2) / (n * h / 2);
    CHECK(steklov_multiplier(SteklovOrder::two(), h, 1, n) == doctest::Approx(sinc * sinc).epsilon(1e-14));
    // Oracle: the convolution integral at x = 0.
    const double quad = integrate([&](double t) { return std::cos(n * t) * (1.0 - std::abs(t) / h) / h; }, -h, h, 1e-13).value;
    CHECK(steklov(PeriodicFunction::cos_n(n), h)(0.0) == doctest::Approx(quad).epsilon(1e-12));
    CHECK(steklov_at(PeriodicFunction::cos_n(n), h, SteklovOrder::two(), 1, 0.0) == doctest::Approx(quad).epsilon(1e-12));
  }
  // Order 2k multiplier is sinc(j ih / 2k)^{2k}.
  CHECK(steklov_multiplier(SteklovOrder::two_k(3), 0.6, 2, 4.0) ==
        doctest::Approx(std::pow(std::sin(0.8) / 0.8, 6)).epsilon(1e-14));
  CHECK_THROWS(steklov(PeriodicFunction::cos_n(1), 0.0));
  CHECK_THROWS(steklov(PeriodicFunction::cos_n(1), 0.1, SteklovOrder::two(), 0));
}

TEST_CASE("property: Steklov averages contract and commute with shifts") {
  Rng rng(34);
  const GridSpec grid{256, 10};
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = trial % 2 ? PeriodicFunction::trig_poly(rng.trig_poly(rng.integer(1, 10)))
                             : PeriodicFunction::smoothed_step(rng.uniform(0.05, 1.0)).shifted(rng.uniform(-3, 3));
    const double h = rng.uniform(0.05, 1.0);
    const SteklovOrder order = SteklovOrder::two_k(rng.integer(1, 3));
    const int i = rng.integer(1, 3);
    double top = 0.0;
    for (int m = 0; m < grid.nodes; ++m) top = std::max(top, std::abs(steklov_at(f, h, order, i, kTwoPi * m / grid.nodes)));
    CHECK(top <= sup_norm(f, grid) + 1e-12);
    const double s = rng.uniform(-2, 2), x = rng.uniform(-kPi, kPi);
    CHECK(steklov_at(f.shifted(s), h, order, i, x) == doctest::Approx(steklov_at(f, h, order, i, x + s)).scale(1).epsilon(1e-11));
  }
}

TEST_CASE("property: W_h = I - U_h pointwise") {
  Rng rng(35);
  const std::vector<PeriodicFunction> fs = {PeriodicFunction::smoothed_step(0.3),
                                            PeriodicFunction::trig_poly(rng.trig_poly(6)), PeriodicFunction::step()};
  for (const auto& f : fs) {
    for (int k = 1; k <= 4; ++k) {
      for (double h : {kPi / 8, kPi / 16}) {
        for (int trial = 0; trial < 100; ++trial) {
          const double x = rng.uniform(-kPi, kPi);
          double u = 0.0;
          for (int i = 1; i <= k; ++i) {
            const double a = binom(2 * k, k + i) / binom(2 * k, k);
            u += 2.0 * (i % 2 ? 1.0 : -1.0) * a * steklov_at(f, h, SteklovOrder::two(), i, x);
          }
          CHECK(std::abs(operator_W_at(f, k, h, x) - (f(x) - u)) <= 1e-8);
        }
      }
    }
  }
  CHECK(operator_W_at(PeriodicFunction::constant(4.0), 2, 0.3, 1.0) == doctest::Approx(0.0).scale(1));
}

TEST_CASE("grid operators agree with the pointwise routes") {
  const GridSpec grid{128, 10};
  const auto f = PeriodicFunction::smoothed_step(0.4);
  const auto W = operator_W(f, 2, 0.5, grid), U = operator_U(f, 2, 0.5, grid);
  for (int m = 0; m < grid.nodes; m += 9) {
    const double x = kTwoPi * m / grid.nodes;
    CHECK(W(x) == doctest::Approx(operator_W_at(f, 2, 0.5, x)).scale(1).epsilon(1e-9));
    CHECK(W(x) + U(x) == doctest::Approx(f(x)).scale(1).epsilon(1e-9));
  }
}

TEST_CASE("W_h and f_h bounds on smooth inputs") {
  Rng rng(36);
  const GridSpec grid{512, 20};
  const std::vector<PeriodicFunction> fs = {PeriodicFunction::cos_n(3), PeriodicFunction::trig_poly(rng.trig_poly(6)),
                                            PeriodicFunction::smoothed_step(0.5)};
  for (const auto& f : fs) {
    for (int k = 1; k <= 3; ++k) {
      const double h = kPi / 6;
      const double omega = modulus(f, 2 * k, h, kInfinity, kFast).value;
      const double g = gamma_star_value(2 * k);
      CAPTURE(f.label());
      CAPTURE(k);
      CHECK(sup_norm(operator_W(f, k, h, grid), grid) <= g * omega + 1e-8);

      const auto fh = smoothing_fh(f, k, h, grid);
      const PiecewiseSignal diff{[&](double x) { return f(x) - fh(x); }, f.breakpoints()};
      CHECK(sup_norm(diff, grid) <= g * omega + 1e-8);

      if (!f.is_piecewise()) {
        double sum = 0.0;
        for (int i = 1; i <= k; ++i) sum += 2.0 * binom(2 * k, k + i) / std::pow(i, 2 * k);
        const double bound = g * omega * std::pow(k / h, 2 * k) * sum;
        CHECK(derivative_sup_norm(fh, 2 * k, 64, grid) <= bound + 1e-8);
      }
    }
  }
  const auto c = smoothing_fh(PeriodicFunction::constant(0.75), 2, 0.4, GridSpec{64, 10});
  CHECK(c(1.0) == doctest::Approx(0.75).epsilon(1e-13));
}
