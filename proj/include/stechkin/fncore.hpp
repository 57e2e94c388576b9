#pragma once

#include "stechkin/trig_poly.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace stechkin {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Uniform nodes on [0, 2pi) plus the number of golden-section steps spent
/// around each of the best discrete maxima.
struct GridSpec {
  int nodes = 4096;
  int refine_depth = 40;

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

struct SeriesResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t terms = 0;
  bool converged = true;
  bool accelerated = false;
};

/// Reduces x to [0, 2pi).
double wrap_angle(double x);

namespace kind {
struct CosN {
  int n;
};
/// 1 on (-pi, 0], 0 on (0, pi].
struct Step {};
/// Step averaged over [-eps, eps]: linear ramps on [-eps, eps] and [pi-eps, pi+eps].
struct SmoothedStep {
  double eps;
};
/// sgn sin(nx).
struct FavardSign {
  int n;
};
struct TrigPolyWrap {
  TrigPolyd poly;
};
struct SampledData {
  std::vector<double> values;
  TrigPolyd interpolant;
};
/// Uniform samples on [0, 2pi), evaluated through their trigonometric interpolant.
struct Sampled {
  std::shared_ptr<const SampledData> data;
};
}  // namespace kind

/// A 2pi-periodic real function: one of the built-in analytic kinds, a
/// trigonometric polynomial, or interpolated uniform samples. Every kind may
/// carry a phase shift, f(x) = base(x + shift). Immutable.
class PeriodicFunction {
 public:
  using Kind = std::variant<kind::CosN, kind::Step, kind::SmoothedStep, kind::FavardSign,
                            kind::TrigPolyWrap, kind::Sampled>;

  static PeriodicFunction cos_n(int n);
  static PeriodicFunction step();
  static PeriodicFunction smoothed_step(double eps);
  static PeriodicFunction favard_sign(int n);
  static PeriodicFunction trig_poly(TrigPolyd poly);
  static PeriodicFunction constant(double c);
  /// Requires an even number N >= 4 of samples at 2*pi*m/N.
  static PeriodicFunction sampled(std::vector<double> values);

  double operator()(double x) const;

  PeriodicFunction shifted(double s) const;

  const Kind& kind() const { return kind_; }
  double shift() const { return shift_; }

  /// Exact trigonometric-polynomial form (shift applied) for CosN,
  /// TrigPolyWrap and Sampled; empty for the piecewise kinds.
  std::optional<TrigPolyd> spectrum() const;

  /// Points in [0, 2pi) where the function is not smooth, sorted.
  std::vector<double> breakpoints() const;

  bool is_piecewise() const { return !spectrum_available(); }

  std::string label() const;

 private:
  explicit PeriodicFunction(Kind k, double shift = 0.0) : kind_(std::move(k)), shift_(shift) {}
  bool spectrum_available() const;

  Kind kind_;
  double shift_ = 0.0;
};

double evaluate(const PeriodicFunction& f, double x);

/// A periodic function known only through point evaluation and the list of
/// points (in [0, 2pi)) where it may fail to be smooth. Used for derived
/// functions such as finite differences and residuals.
struct PiecewiseSignal {
  std::function<double(double)> eval;
  std::vector<double> breakpoints;
};

double sup_norm(const PeriodicFunction& f, const GridSpec& grid = {});
double sup_norm(const TrigPolyd& p, const GridSpec& grid = {});
double sup_norm(const PiecewiseSignal& g, const GridSpec& grid = {});

/// Sup norm from precomputed values at the uniform nodes plus extra points;
/// golden-section refinement uses `eval`.
double sup_norm_from_samples(const std::function<double(double)>& eval,
                             const Eigen::VectorXd& uniform_values,
                             const std::vector<double>& extra_points, const GridSpec& grid);

/// (integral over one period of |f|^p)^(1/p); p = infinity gives the sup norm.
double lp_norm(const PeriodicFunction& f, double p, const GridSpec& grid = {});
double lp_norm(const TrigPolyd& poly, double p, const GridSpec& grid = {});
double lp_norm(const PiecewiseSignal& g, double p, const GridSpec& grid = {});

/// Adaptive Simpson quadrature with Richardson correction. `tol` is absolute.
/// Non-convergence within the evaluation budget is reported through
/// QuadResult::converged, never thrown.
QuadResult integrate(const std::function<double(double)>& g, double a, double b, double tol,
                     std::size_t max_evals = 5'000'000);

/// Sum of an alternating series with terms of decreasing magnitude. Direct
/// summation stops once the first omitted term is below tol; slowly decaying
/// series fall back to Cohen-Villegas-Zagier acceleration.
SeriesResult alternating_series_sum(const std::function<double(std::size_t)>& term, double tol,
                                    std::size_t max_terms = 200'000);

/// Sum of a positive decreasing series. `tail_integral(N)` must return the
/// integral from N to infinity of the term's continuous extension; the tail
/// is then bracketed between that integral and the integral plus term(N).
SeriesResult monotone_series_sum(const std::function<double(std::size_t)>& term,
                                 const std::function<double(std::size_t)>& tail_integral, double tol,
                                 std::size_t max_terms = 50'000'000);

}  // namespace stechkin
