#include "stechkin/smoothness.hpp"

#include "stechkin/constants.hpp"
#include "stechkin/trig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stechkin {

namespace {

// (coefficient, offset multiplier) pairs of a difference: value = sum c f(x + m h).
std::vector<std::pair<double, int>> difference_terms(const DifferenceSpec& spec) {
  std::vector<std::pair<double, int>> terms;
  if (spec.flavor == DifferenceFlavor::Forward) {
    for (int i = 0; i <= spec.order; ++i)
      terms.emplace_back((i % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binomial(spec.order, i)), i);
  } else {
    const int k = spec.order / 2;
    for (int i = -k; i <= k; ++i)
      terms.emplace_back((std::abs(i) % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binomial(2 * k, k + i)), i);
  }
  return terms;
}

std::vector<double> node_values(const PeriodicFunction& g, int nodes) {
  std::vector<double> v(static_cast<std::size_t>(nodes));
  for (int m = 0; m < nodes; ++m) v[static_cast<std::size_t>(m)] = g(kTwoPi * m / nodes);
  return v;
}

PeriodicFunction sampled_poly(const TrigPolyd& p, const GridSpec& grid) {
  const Eigen::VectorXd v = p.sample(grid.nodes);
  return PeriodicFunction::sampled(std::vector<double>(v.data(), v.data() + v.size()));
}

// Integral of g over [a, b] split at the given interior points.
double piecewise_integral(const std::function<double(double)>& g, double a, double b, std::vector<double> cuts,
                          double tol) {
  cuts.erase(std::remove_if(cuts.begin(), cuts.end(), [&](double t) { return !(t > a && t < b); }), cuts.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(b);
  const double piece_tol = tol / static_cast<double>(cuts.size());
  double total = 0.0;
  double lo = a;
  for (double hi : cuts) {
    if (hi - lo > 1e-15) total += integrate(g, lo, hi, piece_tol).value;
    lo = hi;
  }
  return total;
}

// Values t in (lo, hi) with x + c t hitting a breakpoint of f, c != 0.
void collect_kinks(const std::vector<double>& bps, double x, double c, double lo, double hi, std::vector<double>& out) {
  const double period = kTwoPi / std::abs(c);
  for (double b : bps) {
    // x + c t = b + 2 pi m  <=>  t = (b - x + 2 pi m) / c
    const double t0 = (b - x) / c;
    const double first = t0 + period * std::ceil((lo - t0) / period);
    for (double t = first; t < hi; t += period)
      if (t > lo) out.push_back(t);
  }
}

// 2/h * integral_0^h 4^k sin^{2k}(jt/2) (1 - t/h) dt, the hat-kernel average of
// the central-difference multiplier.
double smoothed_central_multiplier(int k, double h, double j) {
  if (j == 0.0) return 0.0;
  const double scale = std::pow(4.0, k);
  auto g = [&](double t) { return scale * std::pow(std::sin(0.5 * j * t), 2 * k) * (1.0 - t / h); };
  // Split at the zeros of sin(jt/2) so every piece is a single hump.
  std::vector<double> cuts;
  for (double t = kTwoPi / j; t < h; t += kTwoPi / j) cuts.push_back(t);
  return 2.0 / h * piecewise_integral(g, 0.0, h, cuts, 1e-14 * scale * h);
}

// integral_{-h}^{h} Delta^_t^{2k}(f, x) phi_h(t) dt.
double smoothed_central_at(const PeriodicFunction& f, int k, double h, double x, double tol) {
  const std::vector<double> bps = f.breakpoints();
  std::vector<double> cuts;
  for (int i = 1; i <= k; ++i) {
    collect_kinks(bps, x, i, 0.0, h, cuts);
    collect_kinks(bps, x, -i, 0.0, h, cuts);
  }
  const DifferenceSpec spec{2 * k, 0.0, DifferenceFlavor::Central};
  const auto terms = difference_terms(spec);
  auto g = [&](double t) {
    double d = 0.0;
    for (const auto& [c, m] : terms) d += c * f(x + m * t);
    return d * (1.0 - t / h);
  };
  return 2.0 / h * piecewise_integral(g, 0.0, h, cuts, tol * h);
}

void check_positive(double h, const char* what) {
  if (!(h > 0.0)) throw std::invalid_argument(std::string(what) + ": step must be positive");
}

void check_k(int k, const char* what) {
  if (k < 1) throw std::invalid_argument(std::string(what) + ": k must be >= 1");
}

}  // namespace

void DifferenceSpec::validate() const {
  if (order < 1) throw std::invalid_argument("DifferenceSpec: order must be >= 1");
  if (!(step >= 0.0)) throw std::invalid_argument("DifferenceSpec: step must be >= 0");
  if (flavor == DifferenceFlavor::Central && order % 2 != 0)
    throw std::invalid_argument("DifferenceSpec: central differences need even order");
}

double difference(const PeriodicFunction& f, const DifferenceSpec& spec, double x) {
  spec.validate();
  double d = 0.0;
  for (const auto& [c, m] : difference_terms(spec)) d += c * f(x + m * spec.step);
  return d;
}

PiecewiseSignal difference_signal(const PeriodicFunction& f, const DifferenceSpec& spec) {
  spec.validate();
  auto terms = difference_terms(spec);
  std::vector<double> bps;
  for (double b : f.breakpoints())
    for (const auto& term : terms) bps.push_back(wrap_angle(b - term.second * spec.step));
  const double h = spec.step;
  return {[f, terms, h](double x) {
            double d = 0.0;
            for (const auto& [c, m] : terms) d += c * f(x + m * h);
            return d;
          },
          std::move(bps)};
}

std::complex<double> difference_multiplier(const DifferenceSpec& spec, double j) {
  spec.validate();
  if (spec.flavor == DifferenceFlavor::Central)
    return std::pow(4.0, spec.order / 2) * std::pow(std::sin(0.5 * j * spec.step), spec.order);
  return std::pow(1.0 - std::polar(1.0, j * spec.step), spec.order);
}

double difference_norm(const PeriodicFunction& f, const DifferenceSpec& spec, double p, const GridSpec& grid) {
  spec.validate();
  if (auto poly = f.spectrum()) {
    const TrigPolyd d = poly->multiplied([&](Eigen::Index j) { return difference_multiplier(spec, double(j)); });
    return lp_norm(d, p, grid);
  }
  return lp_norm(difference_signal(f, spec), p, grid);
}

ModulusResult modulus(const PeriodicFunction& f, int r, double delta, double p, const ModulusOptions& opt) {
  if (r < 1) throw std::invalid_argument("modulus: r must be >= 1");
  if (!(delta > 0.0) || delta > kTwoPi) throw std::invalid_argument("modulus: delta must lie in (0, 2pi]");
  if (!(p >= 1.0)) throw std::invalid_argument("modulus: p must be >= 1");
  if (opt.h_nodes < 1) throw std::invalid_argument("modulus: h_nodes must be >= 1");
  opt.grid.validate();

  const std::optional<TrigPolyd> poly = f.spectrum();
  auto norm_at = [&](double h) {
    const DifferenceSpec spec{r, h, DifferenceFlavor::Forward};
    if (poly) {
      const TrigPolyd d = poly->multiplied([&](Eigen::Index j) { return difference_multiplier(spec, double(j)); });
      return lp_norm(d, p, opt.grid);
    }
    return lp_norm(difference_signal(f, spec), p, opt.grid);
  };

  ModulusResult res;
  res.r = r;
  res.delta = delta;
  res.p = p;
  auto consider = [&](double h, double v) {
    if (v > res.value) {
      res.value = v;
      res.argmax_h = h;
    }
  };

  const int H = opt.h_nodes;
  std::vector<double> hs(static_cast<std::size_t>(H)), vals(static_cast<std::size_t>(H));
  for (int m = 0; m < H; ++m) {
    hs[std::size_t(m)] = delta * (m + 1) / H;
    vals[std::size_t(m)] = norm_at(hs[std::size_t(m)]);
    consider(hs[std::size_t(m)], vals[std::size_t(m)]);
  }
  if (const auto* c = std::get_if<kind::CosN>(&f.kind())) {
    const double h = std::min(delta, kPi / c->n);
    consider(h, norm_at(h));
  } else if (std::holds_alternative<kind::Step>(f.kind())) {
    // Any h with rh < pi keeps the two jumps apart; the value is then maximal.
    const double h = std::min(delta, 0.5 * kPi / r);
    consider(h, norm_at(h));
  }

  if (opt.h_refine > 0 && H >= 2) {
    std::vector<int> maxima;
    for (int m = 0; m < H; ++m) {
      const double left = m == 0 ? 0.0 : vals[std::size_t(m - 1)];
      const double right = m + 1 == H ? 0.0 : vals[std::size_t(m + 1)];
      if (vals[std::size_t(m)] >= left && vals[std::size_t(m)] >= right) maxima.push_back(m);
    }
    std::sort(maxima.begin(), maxima.end(), [&](int l, int rr) {
      if (vals[std::size_t(l)] != vals[std::size_t(rr)]) return vals[std::size_t(l)] > vals[std::size_t(rr)];
      return l < rr;
    });
    if (maxima.size() > 3) maxima.resize(3);
    constexpr double kGolden = 0.6180339887498949;
    for (int m : maxima) {
      double a = m == 0 ? 1e-3 * hs[0] : hs[std::size_t(m - 1)];
      double b = m + 1 == H ? delta : hs[std::size_t(m + 1)];
      double c = b - kGolden * (b - a);
      double d = a + kGolden * (b - a);
      double fc = norm_at(c);
      double fd = norm_at(d);
      consider(c, fc);
      consider(d, fd);
      for (int it = 0; it < opt.h_refine; ++it) {
        if (fc > fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - kGolden * (b - a);
          fc = norm_at(c);
          consider(c, fc);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + kGolden * (b - a);
          fd = norm_at(d);
          consider(d, fd);
        }
      }
    }
  }
  return res;
}

ModulusResult smoothed_modulus(const PeriodicFunction& f, int k, double h, const GridSpec& grid) {
  check_k(k, "smoothed_modulus");
  check_positive(h, "smoothed_modulus");
  grid.validate();
  ModulusResult res;
  res.r = 2 * k;
  res.delta = h;
  res.argmax_h = h;
  res.flavor = ModulusFlavor::Smoothed;
  if (auto poly = f.spectrum()) {
    const TrigPolyd avg = poly->multiplied([&](Eigen::Index j) { return smoothed_central_multiplier(k, h, double(j)); });
    res.value = sup_norm(avg, grid);
    return res;
  }
  std::vector<double> events;
  for (double b : f.breakpoints())
    for (int i = -k; i <= k; ++i) events.push_back(b - i * h);
  res.value = sup_norm(PiecewiseSignal{[&](double x) { return smoothed_central_at(f, k, h, x, 1e-12); }, events}, grid);
  return res;
}

double hat_kernel(double h, double t) {
  check_positive(h, "hat_kernel");
  const double a = std::abs(t);
  return a >= h ? 0.0 : (1.0 - a / h) / h;
}

double bspline_kernel(int order, double s, double t) {
  if (order < 1) throw std::invalid_argument("bspline_kernel: order must be >= 1");
  check_positive(s, "bspline_kernel");
  const double u = t / s + 0.5 * order;
  if (u <= 0.0 || u >= order) return 0.0;
  // Cox-de Boor on integer knots: N[j] holds M_d(u - j).
  std::vector<double> N(static_cast<std::size_t>(order), 0.0);
  N[static_cast<std::size_t>(std::min<int>(order - 1, static_cast<int>(std::floor(u))))] = 1.0;
  for (int d = 2; d <= order; ++d)
    for (int j = 0; j <= order - d; ++j)
      N[std::size_t(j)] = ((u - j) * N[std::size_t(j)] + (j + d - u) * N[std::size_t(j + 1)]) / (d - 1);
  return N[0] / s;
}

double steklov_multiplier(SteklovOrder order, double h, int i, double j) {
  check_k(order.k, "steklov_multiplier");
  if (j == 0.0) return 1.0;
  const double u = 0.5 * j * i * h / order.k;
  return std::pow(std::sin(u) / u, 2 * order.k);
}

double steklov_at(const PeriodicFunction& f, double h, SteklovOrder order, int i, double x, double tol) {
  check_positive(h, "steklov_at");
  check_k(order.k, "steklov_at");
  if (i < 1) throw std::invalid_argument("steklov_at: i must be >= 1");
  const double half = i * h;
  const double s = half / order.k;
  std::vector<double> cuts;
  for (int m = 1; m < 2 * order.k; ++m) cuts.push_back(-half + m * s);
  collect_kinks(f.breakpoints(), x, 1.0, -half, half, cuts);
  auto g = [&](double t) { return f(x + t) * bspline_kernel(2 * order.k, s, t); };
  return piecewise_integral(g, -half, half, cuts, tol);
}

PeriodicFunction steklov(const PeriodicFunction& f, double h, SteklovOrder order, int i, const GridSpec& grid) {
  check_positive(h, "steklov");
  check_k(order.k, "steklov");
  if (i < 1) throw std::invalid_argument("steklov: i must be >= 1");
  grid.validate();
  if (auto poly = f.spectrum())
    return sampled_poly(poly->multiplied([&](Eigen::Index j) { return steklov_multiplier(order, h, i, double(j)); }),
                        grid);
  std::vector<double> v(static_cast<std::size_t>(grid.nodes));
  for (int m = 0; m < grid.nodes; ++m) v[std::size_t(m)] = steklov_at(f, h, order, i, kTwoPi * m / grid.nodes, 1e-13);
  return PeriodicFunction::sampled(std::move(v));
}

double operator_W_at(const PeriodicFunction& f, int k, double h, double x, double tol) {
  check_k(k, "operator_W_at");
  check_positive(h, "operator_W_at");
  return gamma_star_value(2 * k) * smoothed_central_at(f, k, h, x, tol);
}

PeriodicFunction operator_W(const PeriodicFunction& f, int k, double h, const GridSpec& grid) {
  check_k(k, "operator_W");
  check_positive(h, "operator_W");
  grid.validate();
  const double g = gamma_star_value(2 * k);
  if (auto poly = f.spectrum())
    return sampled_poly(
        poly->multiplied([&](Eigen::Index j) { return g * smoothed_central_multiplier(k, h, double(j)); }), grid);
  std::vector<double> v(static_cast<std::size_t>(grid.nodes));
  for (int m = 0; m < grid.nodes; ++m) v[std::size_t(m)] = operator_W_at(f, k, h, kTwoPi * m / grid.nodes, 1e-13);
  return PeriodicFunction::sampled(std::move(v));
}

PeriodicFunction operator_U(const PeriodicFunction& f, int k, double h, const GridSpec& grid) {
  check_k(k, "operator_U");
  check_positive(h, "operator_U");
  grid.validate();
  std::vector<double> total(static_cast<std::size_t>(grid.nodes), 0.0);
  for (int i = 1; i <= k; ++i) {
    const double w = 2.0 * (i % 2 == 1 ? 1.0 : -1.0) * static_cast<double>(central_ratio(k, i));
    const std::vector<double> v = node_values(steklov(f, h, SteklovOrder::two(), i, grid), grid.nodes);
    for (std::size_t m = 0; m < v.size(); ++m) total[m] += w * v[m];
  }
  return PeriodicFunction::sampled(std::move(total));
}

PeriodicFunction smoothing_fh(const PeriodicFunction& f, int k, double h, const GridSpec& grid) {
  check_k(k, "smoothing_fh");
  check_positive(h, "smoothing_fh");
  grid.validate();
  const double g = gamma_star_value(2 * k);
  std::vector<double> total(static_cast<std::size_t>(grid.nodes), 0.0);
  for (int i = 1; i <= k; ++i) {
    const double w = g * 2.0 * (i % 2 == 1 ? 1.0 : -1.0) * static_cast<double>(binomial(2 * k, k + i));
    const std::vector<double> v = node_values(steklov(f, h, SteklovOrder::two_k(k), i, grid), grid.nodes);
    for (std::size_t m = 0; m < v.size(); ++m) total[m] += w * v[m];
  }
  return PeriodicFunction::sampled(std::move(total));
}

double derivative_sup_norm(const PeriodicFunction& f, int order, int cutoff, const GridSpec& grid) {
  if (order < 0) throw std::invalid_argument("derivative_sup_norm: order must be >= 0");
  return sup_norm(fourier_coeffs(f, cutoff, grid).coeffs.derivative(order), grid);
}

}  // namespace stechkin
