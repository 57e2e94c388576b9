#pragma once

#include "stechkin/fncore.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace stechkin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact C(n, k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// gamma*_r = 1 / C(r, floor(r/2)); r = 0 gives 1.
Rational gamma_star(int r);
double gamma_star_value(int r);
/// sqrt(r) / 2^r.
double gamma_star_asymptotic(int r);

/// F_r = (4/pi) sum_i (-1)^{i(r+1)} / (2i+1)^{r+1}.
SeriesResult favard(int r, double tol = 1e-12);

/// F_{2m} = |E_{2m}| pi^{2m} / (2^{2m} (2m)!) from exact Euler numbers.
double favard_even_from_euler(int m);

/// a_i = C(2k, k+i) / C(2k, k).
Rational central_ratio(int k, int i);

/// mu^2_{2k} = (8/pi^2) sum_{odd i <= k} a_i / i^2.
double mu_squared(int k);

/// J_m = integral_0^{pi/2} t cos^m t dt: adaptive quadrature for m <= 80,
/// the integration-by-parts recurrence J_m = (m-1)/m J_{m-2} - 1/m^2 above.
QuadResult t_cos_power_integral(int m, double tol = 1e-13);

/// (8/pi^2) (4^k / C(2k,k)) J_{2k}, which equals 1 - mu^2_{2k}.
QuadResult one_minus_mu_squared_integral(int k, double tol = 1e-13);

/// 4^k / C(2k, k).
double wallis_ratio(int k);

struct SecantBound {
  double value;       ///< sec(pi / (2 alpha))
  double comparator;  ///< (4/pi) (1 - alpha^-2)^-1
};

/// Bohr-Favard difference constant for alpha > 1.
SecantBound c_alpha(double alpha);

/// sec(pi rho / 2) for |rho| < 1.
double secant_bound(double rho);

/// Partial sum sum_{m=0}^{M} F_{2m} rho^{2m} of the secant expansion.
double secant_series(double rho, int M);

enum class LebesgueFactor {
  LogBound,         ///< 2 + (4/pi^2) ln(2/(1-s))
  IntegerLogBound,  ///< 2 + (4/pi^2) ln((1+s)/(1-s))
  ExactEll,         ///< 1 + l((1+s)/(1-s))
};

/// sec(pi mu / (2 alpha s)) times the Lebesgue factor; requires s in (0,1),
/// mu in (0,1] and mu / (alpha s) < 1.
QuadResult composite_vp_constant(double alpha, double s, double mu, LebesgueFactor mode, double tol = 1e-8);

/// Constant for delta = alpha pi / n with alpha > 1: s = 1/sqrt(alpha), mu = 1.
double vp_alpha_constant(double alpha);

/// Constant for delta = pi / n and r = 2k: mu = mu_{2k}, s = sqrt(mu), so the
/// secant argument is pi sqrt(mu) / 2. Odd r uses k = ceil(r/2).
double vp_pi_over_n_constant(int r);

/// 2 sqrt(r) ln r + 12 sqrt(r).
double pi_over_n_comparator(int r);

/// c_{2k}(alpha pi / n) = 1 + F_{2k} k^{2k} / (alpha pi)^{2k} sum_{i=1}^{k} 2 C(2k,k+i) / i^{2k}.
double small_r_constant(int k, double alpha);

/// c'_r: r/(r+1) for odd r, 1 for even r.
Rational lower_bound_constant(int r);

/// 1 / sqrt(C(2r, r)).
double chernykh_constant(int r);
/// r^{1/4} / 2^r.
double chernykh_asymptotic(int r);

/// r^{max(1/2p, 1/2p')} 2^{-r}, the guessed order of the L_p constant.
double conjectured_lp_order(int r, double p);

struct ConstantValue {
  std::string name;
  std::map<std::string, double> params;
  double value = 0.0;
  double err_estimate = 0.0;
  std::string anchor;
};

/// The named constants quoted with numeric values: composite bounds, L_8,
/// the small-r table, Favard constants and the c_alpha table.
std::vector<ConstantValue> named_constants(double tol = 1e-8);

}  // namespace stechkin
