#include "stechkin/constants.hpp"

#include "stechkin/trig.hpp"

#include <cmath>
#include <stdexcept>

namespace stechkin {

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

Rational gamma_star(int r) {
  if (r < 0) throw std::invalid_argument("gamma_star: r must be >= 0");
  return Rational(BigInt(1), binomial(r, r / 2));
}

double gamma_star_value(int r) { return static_cast<double>(gamma_star(r)); }

double gamma_star_asymptotic(int r) {
  if (r < 1) throw std::invalid_argument("gamma_star_asymptotic: r must be >= 1");
  return std::sqrt(static_cast<double>(r)) * std::pow(2.0, -r);
}

SeriesResult favard(int r, double tol) {
  if (r < 0) throw std::invalid_argument("favard: r must be >= 0");
  const double scale = 4.0 / kPi;
  const double s = r + 1.0;
  if (r % 2 == 0) {
    return alternating_series_sum(
        [&](std::size_t i) { return scale * (i % 2 == 0 ? 1.0 : -1.0) * std::pow(2.0 * i + 1.0, -s); }, tol);
  }
  return monotone_series_sum([&](std::size_t i) { return scale * std::pow(2.0 * i + 1.0, -s); },
                             [&](std::size_t N) { return scale * std::pow(2.0 * N + 1.0, 1.0 - s) / (2.0 * (s - 1.0)); },
                             tol);
}

double favard_even_from_euler(int m) {
  if (m < 0) throw std::invalid_argument("favard_even_from_euler: m must be >= 0");
  // sum_{j=0}^{q} C(2q, 2j) E_{2j} = 0 for q >= 1, E_0 = 1.
  std::vector<BigInt> euler{BigInt(1)};
  for (int q = 1; q <= m; ++q) {
    BigInt acc = 0;
    for (int j = 0; j < q; ++j) acc += binomial(2 * q, 2 * j) * euler[static_cast<std::size_t>(j)];
    euler.push_back(-acc);
  }
  BigInt denom = BigInt(1) << (2 * m);
  for (int i = 2; i <= 2 * m; ++i) denom *= i;
  const Rational ratio(abs(euler.back()), denom);
  return static_cast<double>(ratio) * std::pow(kPi, 2 * m);
}

Rational central_ratio(int k, int i) {
  if (k < 1) throw std::invalid_argument("central_ratio: k must be >= 1");
  return Rational(binomial(2 * k, k + i), binomial(2 * k, k));
}

double mu_squared(int k) {
  if (k < 1) throw std::invalid_argument("mu_squared: k must be >= 1");
  const BigInt centre = binomial(2 * k, k);
  BigInt b = centre;  // C(2k, k+i), updated in place
  Rational sum = 0;
  for (int i = 1; i <= k; ++i) {
    b = b * (k - i + 1) / (k + i);
    if (i % 2 == 1) sum += Rational(b, centre * i * i);
  }
  return 8.0 / (kPi * kPi) * static_cast<double>(sum);
}

QuadResult t_cos_power_integral(int m, double tol) {
  if (m < 0) throw std::invalid_argument("t_cos_power_integral: m must be >= 0");
  if (m <= 80) {
    return integrate([m](double t) { return t * std::pow(std::cos(t), m); }, 0.0, kPi / 2.0, tol);
  }
  // Start from the closed forms J_0 = pi^2/8 and J_1 = pi/2 - 1.
  double j = m % 2 == 0 ? kPi * kPi / 8.0 : kPi / 2.0 - 1.0;
  for (int q = m % 2 == 0 ? 2 : 3; q <= m; q += 2) j = (q - 1.0) / q * j - 1.0 / (static_cast<double>(q) * q);
  QuadResult res;
  res.value = j;
  res.err_estimate = 1e-16 * m;
  return res;
}

double wallis_ratio(int k) {
  if (k < 0) throw std::invalid_argument("wallis_ratio: k must be >= 0");
  return static_cast<double>(Rational(BigInt(1) << (2 * k), binomial(2 * k, k)));
}

QuadResult one_minus_mu_squared_integral(int k, double tol) {
  if (k < 1) throw std::invalid_argument("one_minus_mu_squared_integral: k must be >= 1");
  QuadResult j = t_cos_power_integral(2 * k, tol);
  const double factor = 8.0 / (kPi * kPi) * wallis_ratio(k);
  j.value *= factor;
  j.err_estimate *= factor;
  return j;
}

SecantBound c_alpha(double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("c_alpha: alpha must exceed 1");
  return {1.0 / std::cos(kPi / (2.0 * alpha)), 4.0 / kPi / (1.0 - 1.0 / (alpha * alpha))};
}

double secant_bound(double rho) {
  if (!(std::abs(rho) < 1.0)) throw std::invalid_argument("secant_bound: need |rho| < 1");
  return 1.0 / std::cos(kPi * rho / 2.0);
}

double secant_series(double rho, int M) {
  if (M < 0) throw std::invalid_argument("secant_series: M must be >= 0");
  double sum = 0.0;
  double power = 1.0;
  for (int m = 0; m <= M; ++m) {
    sum += favard(2 * m, 1e-16).value * power;
    power *= rho * rho;
  }
  return sum;
}

QuadResult composite_vp_constant(double alpha, double s, double mu, LebesgueFactor mode, double tol) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("composite_vp_constant: s must lie in (0, 1)");
  if (!(mu > 0.0 && mu <= 1.0)) throw std::invalid_argument("composite_vp_constant: mu must lie in (0, 1]");
  if (!(alpha > 0.0)) throw std::invalid_argument("composite_vp_constant: alpha must be positive");
  const double rho = mu / (alpha * s);
  if (!(rho < 1.0)) throw std::invalid_argument("composite_vp_constant: need mu / (alpha s) < 1");
  const double secant = secant_bound(rho);
  QuadResult res;
  switch (mode) {
    case LebesgueFactor::LogBound:
      res.value = 2.0 + 4.0 / (kPi * kPi) * std::log(2.0 / (1.0 - s));
      break;
    case LebesgueFactor::IntegerLogBound:
      res.value = 2.0 + 4.0 / (kPi * kPi) * std::log((1.0 + s) / (1.0 - s));
      break;
    case LebesgueFactor::ExactEll: {
      const QuadResult ell = ell_function((1.0 + s) / (1.0 - s), tol / secant);
      res = ell;
      res.value += 1.0;
      break;
    }
  }
  res.value *= secant;
  res.err_estimate *= secant;
  return res;
}

double vp_alpha_constant(double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("vp_alpha_constant: alpha must exceed 1");
  return composite_vp_constant(alpha, 1.0 / std::sqrt(alpha), 1.0, LebesgueFactor::LogBound).value;
}

double vp_pi_over_n_constant(int r) {
  if (r < 1) throw std::invalid_argument("vp_pi_over_n_constant: r must be >= 1");
  const double mu = std::sqrt(mu_squared((r + 1) / 2));
  return composite_vp_constant(1.0, std::sqrt(mu), mu, LebesgueFactor::LogBound).value;
}

double pi_over_n_comparator(int r) {
  if (r < 1) throw std::invalid_argument("pi_over_n_comparator: r must be >= 1");
  const double sr = std::sqrt(static_cast<double>(r));
  return 2.0 * sr * std::log(static_cast<double>(r)) + 12.0 * sr;
}

double small_r_constant(int k, double alpha) {
  if (k < 1) throw std::invalid_argument("small_r_constant: k must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("small_r_constant: alpha must be positive");
  double sum = 0.0;
  for (int i = 1; i <= k; ++i) sum += 2.0 * static_cast<double>(binomial(2 * k, k + i)) / std::pow(i, 2 * k);
  const double ratio = std::pow(k / (alpha * kPi), 2 * k);
  return 1.0 + favard(2 * k, 1e-15).value * ratio * sum;
}

Rational lower_bound_constant(int r) {
  if (r < 1) throw std::invalid_argument("lower_bound_constant: r must be >= 1");
  if (r % 2 == 0) return Rational(1);
  return Rational(BigInt(r), BigInt(r + 1));
}

double chernykh_constant(int r) {
  if (r < 1) throw std::invalid_argument("chernykh_constant: r must be >= 1");
  return 1.0 / std::sqrt(static_cast<double>(binomial(2 * r, r)));
}

double chernykh_asymptotic(int r) {
  if (r < 1) throw std::invalid_argument("chernykh_asymptotic: r must be >= 1");
  return std::pow(static_cast<double>(r), 0.25) * std::pow(2.0, -r);
}

double conjectured_lp_order(int r, double p) {
  if (r < 1) throw std::invalid_argument("conjectured_lp_order: r must be >= 1");
  if (!(p >= 1.0)) throw std::invalid_argument("conjectured_lp_order: p must be >= 1");
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  const double exponent = 0.5 * std::max(inv_p, 1.0 - inv_p);
  return std::pow(static_cast<double>(r), exponent) * std::pow(2.0, -r);
}

std::vector<ConstantValue> named_constants(double tol) {
  std::vector<ConstantValue> out;
  const double s = 8.0 / 9.0;
  auto composite = [&](const char* name, LebesgueFactor mode, const char* anchor) {
    const QuadResult c = composite_vp_constant(2.0, s, 1.0, mode, tol);
    out.push_back({name, {{"alpha", 2.0}, {"s", s}, {"mu", 1.0}}, c.value, c.err_estimate, anchor});
  };
  composite("vp_constant_log_bound", LebesgueFactor::LogBound, "vp-constant-below-five");
  composite("vp_constant_integer_log_bound", LebesgueFactor::IntegerLogBound, "vp-constant-integer-log");
  composite("vp_constant_exact_ell", LebesgueFactor::ExactEll, "vp-constant-exact-lebesgue");

  const QuadResult l8 = lebesgue_constant(8, tol);
  out.push_back({"lebesgue_constant", {{"N", 8.0}}, l8.value, l8.err_estimate, "lebesgue-constant-eight"});

  for (auto [k, alpha] : std::vector<std::pair<int, double>>{{1, 1.0}, {1, 2.0}, {2, 1.0}, {2, 2.0}, {3, 2.0}})
    out.push_back({"small_r_constant", {{"k", double(k)}, {"alpha", alpha}}, small_r_constant(k, alpha), 1e-15,
                   "small-r-table"});

  for (int r = 0; r <= 6; ++r) {
    const SeriesResult f = favard(r, std::min(tol, 1e-12));
    out.push_back({"favard", {{"r", double(r)}}, f.value, f.err_estimate, "favard-constants"});
  }

  for (double alpha : {2.0, 1.5, 4.0 / 3.0, 1.25})
    out.push_back({"c_alpha", {{"alpha", alpha}}, c_alpha(alpha).value, 0.0, "c-alpha-table"});
  return out;
}

}  // namespace stechkin
