#include "stechkin/fncore.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace stechkin {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kGolden = 0.6180339887498949;  // (sqrt 5 - 1) / 2
constexpr int kRefinedMaxima = 5;

// Reduces x to (-pi, pi].
double centred_angle(double x) {
  double r;
  // One period away the subtraction is exact (Sterbenz), so skip remainder().
  if (std::abs(x) <= kPi) r = x;
  else if (x > 0.0 && x <= 3.0 * kPi) r = x - kTwoPi;
  else if (x < 0.0 && x >= -3.0 * kPi) r = x + kTwoPi;
  else r = std::remainder(x, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

double eval_step(double x) { return centred_angle(x) <= 0.0 ? 1.0 : 0.0; }

double eval_smoothed_step(double eps, double x) {
  const double y = centred_angle(x);
  if (std::abs(y) <= eps) return (eps - y) / (2.0 * eps);
  if (std::abs(y) >= kPi - eps) {
    const double z = y > 0.0 ? y : y + kTwoPi;  // z in [pi - eps, pi + eps]
    return (z - kPi + eps) / (2.0 * eps);
  }
  return y < 0.0 ? 1.0 : 0.0;
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

double eval_sampled(const kind::SampledData& d, double x) {
  const auto n = static_cast<double>(d.values.size());
  const double t = wrap_angle(x) * n / kTwoPi;
  const double node = std::round(t);
  if (std::abs(t - node) < 1e-10) {
    auto m = static_cast<std::size_t>(node);
    if (m == d.values.size()) m = 0;
    return d.values[m];
  }
  return d.interpolant(x);
}

TrigPolyd interpolant_from_samples(const std::vector<double>& values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  std::vector<std::complex<double>> spectrum;
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, values);
  const Eigen::Index half = n / 2;
  TrigPolyd p(half);
  p.a()(0) = 2.0 * spectrum[0].real() / static_cast<double>(n);
  for (Eigen::Index j = 1; j < half; ++j) {
    p.a()(j) = 2.0 * spectrum[static_cast<std::size_t>(j)].real() / static_cast<double>(n);
    p.b()(j) = -2.0 * spectrum[static_cast<std::size_t>(j)].imag() / static_cast<double>(n);
  }
  p.a()(half) = spectrum[static_cast<std::size_t>(half)].real() / static_cast<double>(n);

  // Drop trailing coefficients at round-off level so that band-limited data
  // stored on a fine grid evaluates at the cost of its true degree.
  const double scale = std::max(p.a().cwiseAbs().maxCoeff(), p.b().cwiseAbs().maxCoeff());
  Eigen::Index keep = half;
  while (keep > 0 && std::abs(p.a()(keep)) + std::abs(p.b()(keep)) <= 1e-14 * scale) --keep;
  return p.truncated(keep);
}

std::vector<double> sorted_unique(std::vector<double> pts) {
  for (double& x : pts) x = wrap_angle(x);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(), [](double l, double r) { return std::abs(l - r) < 1e-15; }),
            pts.end());
  return pts;
}

// Golden-section search for the maximum of |g| on [a, b]; returns the best
// value seen, so deeper searches never report less.
double golden_max_abs(const std::function<double(double)>& g, double a, double b, int depth) {
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = std::abs(g(c));
  double fd = std::abs(g(d));
  double best = std::max(fc, fd);
  for (int it = 0; it < depth; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = std::abs(g(c));
      best = std::max(best, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = std::abs(g(d));
      best = std::max(best, fd);
    }
  }
  return best;
}

// Nodes of the 8-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 8> kGaussX = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                           -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                           0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGaussW = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                           0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                           0.2223810344533745, 0.1012285362903763};

}  // namespace

void GridSpec::validate() const {
  if (nodes < 4) throw std::invalid_argument("GridSpec: nodes must be >= 4");
  if (refine_depth < 0) throw std::invalid_argument("GridSpec: refine_depth must be >= 0");
}

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

PeriodicFunction PeriodicFunction::cos_n(int n) {
  if (n < 1) throw std::invalid_argument("cos_n: n must be positive");
  return PeriodicFunction(kind::CosN{n});
}

PeriodicFunction PeriodicFunction::step() { return PeriodicFunction(kind::Step{}); }

PeriodicFunction PeriodicFunction::smoothed_step(double eps) {
  if (!(eps > 0.0) || eps >= kPi / 2.0)
    throw std::invalid_argument("smoothed_step: eps must lie in (0, pi/2)");
  return PeriodicFunction(kind::SmoothedStep{eps});
}

PeriodicFunction PeriodicFunction::favard_sign(int n) {
  if (n < 1) throw std::invalid_argument("favard_sign: n must be positive");
  return PeriodicFunction(kind::FavardSign{n});
}

PeriodicFunction PeriodicFunction::trig_poly(TrigPolyd poly) {
  return PeriodicFunction(kind::TrigPolyWrap{std::move(poly)});
}

PeriodicFunction PeriodicFunction::constant(double c) { return trig_poly(TrigPolyd::constant(c)); }

PeriodicFunction PeriodicFunction::sampled(std::vector<double> values) {
  if (values.size() < 4 || values.size() % 2 != 0)
    throw std::invalid_argument("sampled: need an even number N >= 4 of samples");
  auto data = std::make_shared<kind::SampledData>();
  data->interpolant = interpolant_from_samples(values);
  data->values = std::move(values);
  return PeriodicFunction(kind::Sampled{std::move(data)});
}

double PeriodicFunction::operator()(double x) const {
  const double y = x + shift_;
  return std::visit(overloaded{
                        [y](const kind::CosN& k) { return std::cos(k.n * wrap_angle(y)); },
                        [y](const kind::Step&) { return eval_step(y); },
                        [y](const kind::SmoothedStep& k) { return eval_smoothed_step(k.eps, y); },
                        [y](const kind::FavardSign& k) { return sign(std::sin(k.n * wrap_angle(y))); },
                        [y](const kind::TrigPolyWrap& k) { return k.poly(wrap_angle(y)); },
                        [y](const kind::Sampled& k) { return eval_sampled(*k.data, y); },
                    },
                    kind_);
}

double evaluate(const PeriodicFunction& f, double x) { return f(x); }

PeriodicFunction PeriodicFunction::shifted(double s) const {
  return PeriodicFunction(kind_, centred_angle(shift_ + s));
}

bool PeriodicFunction::spectrum_available() const {
  return std::holds_alternative<kind::CosN>(kind_) || std::holds_alternative<kind::TrigPolyWrap>(kind_) ||
         std::holds_alternative<kind::Sampled>(kind_);
}

std::optional<TrigPolyd> PeriodicFunction::spectrum() const {
  std::optional<TrigPolyd> base;
  if (const auto* c = std::get_if<kind::CosN>(&kind_)) base = TrigPolyd::cosine(c->n);
  else if (const auto* t = std::get_if<kind::TrigPolyWrap>(&kind_)) base = t->poly;
  else if (const auto* s = std::get_if<kind::Sampled>(&kind_)) base = s->data->interpolant;
  if (base && shift_ != 0.0) return base->shifted(shift_);
  return base;
}

std::vector<double> PeriodicFunction::breakpoints() const {
  std::vector<double> pts = std::visit(
      overloaded{
          [](const kind::Step&) { return std::vector<double>{0.0, kPi}; },
          [](const kind::SmoothedStep& k) {
            return std::vector<double>{-k.eps, k.eps, kPi - k.eps, kPi + k.eps};
          },
          [](const kind::FavardSign& k) {
            std::vector<double> v;
            for (int j = 0; j < 2 * k.n; ++j) v.push_back(j * kPi / k.n);
            return v;
          },
          [](const auto&) { return std::vector<double>{}; },
      },
      kind_);
  for (double& x : pts) x -= shift_;
  return sorted_unique(std::move(pts));
}

std::string PeriodicFunction::label() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const kind::CosN& k) { os << "cos(" << k.n << "x)"; },
                 [&](const kind::Step&) { os << "step"; },
                 [&](const kind::SmoothedStep& k) { os << "smoothed_step(eps=" << k.eps << ")"; },
                 [&](const kind::FavardSign& k) { os << "sgn_sin(" << k.n << "x)"; },
                 [&](const kind::TrigPolyWrap& k) { os << "trig_poly(deg=" << k.poly.degree() << ")"; },
                 [&](const kind::Sampled& k) { os << "sampled(N=" << k.data->values.size() << ")"; },
             },
             kind_);
  if (shift_ != 0.0) os << "[shift=" << shift_ << "]";
  return os.str();
}

double sup_norm_from_samples(const std::function<double(double)>& eval, const Eigen::VectorXd& uniform_values,
                             const std::vector<double>& extra_points, const GridSpec& grid) {
  const auto n = uniform_values.size();
  std::vector<std::pair<double, double>> pts;
  pts.reserve(static_cast<std::size_t>(n) + extra_points.size());
  for (Eigen::Index m = 0; m < n; ++m)
    pts.emplace_back(kTwoPi * static_cast<double>(m) / static_cast<double>(n), std::abs(uniform_values(m)));
  if (!extra_points.empty()) {
    std::vector<std::pair<double, double>> extra;
    extra.reserve(extra_points.size());
    for (double x : extra_points) {
      const double w = wrap_angle(x);
      extra.emplace_back(w, std::abs(eval(w)));
    }
    std::sort(extra.begin(), extra.end());
    const auto mid = pts.insert(pts.end(), extra.begin(), extra.end());
    std::inplace_merge(pts.begin(), mid, pts.end());
  }

  double best = 0.0;
  for (const auto& p : pts) best = std::max(best, p.second);
  if (grid.refine_depth == 0 || pts.size() < 3) return best;

  const std::size_t count = pts.size();
  std::vector<std::size_t> maxima;
  for (std::size_t i = 0; i < count; ++i) {
    const double v = pts[i].second;
    if (v >= pts[(i + count - 1) % count].second && v >= pts[(i + 1) % count].second) maxima.push_back(i);
  }
  // Largest value first, then smallest x.
  const std::size_t keep = std::min<std::size_t>(maxima.size(), kRefinedMaxima);
  std::partial_sort(maxima.begin(), maxima.begin() + static_cast<std::ptrdiff_t>(keep), maxima.end(),
                    [&](std::size_t l, std::size_t r) {
                      if (pts[l].second != pts[r].second) return pts[l].second > pts[r].second;
                      return pts[l].first < pts[r].first;
                    });
  maxima.resize(keep);

  for (std::size_t i : maxima) {
    const double left = i == 0 ? pts[count - 1].first - kTwoPi : pts[i - 1].first;
    const double right = i + 1 == count ? pts[0].first + kTwoPi : pts[i + 1].first;
    best = std::max(best, golden_max_abs(eval, left, right, grid.refine_depth));
  }
  return best;
}

double sup_norm(const TrigPolyd& p, const GridSpec& grid) {
  grid.validate();
  return sup_norm_from_samples([&p](double x) { return p(x); }, p.sample(grid.nodes), {}, grid);
}

namespace {

// Breakpoints together with the midpoints between consecutive ones, which
// catch the interior value of piecewise-constant pieces.
std::vector<double> with_midpoints(const std::vector<double>& bps) {
  std::vector<double> pts = sorted_unique(bps);
  const std::size_t n = pts.size();
  if (n == 0) return pts;
  std::vector<double> out = pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = pts[i];
    const double b = i + 1 < n ? pts[i + 1] : pts[0] + kTwoPi;
    out.push_back(0.5 * (a + b));
    // One-sided limits at a jump.
    out.push_back(a - 1e-12);
    out.push_back(a + 1e-12);
  }
  return out;
}

}  // namespace

double sup_norm(const PiecewiseSignal& g, const GridSpec& grid) {
  grid.validate();
  Eigen::VectorXd vals(grid.nodes);
  for (int m = 0; m < grid.nodes; ++m) vals(m) = g.eval(kTwoPi * m / grid.nodes);
  return sup_norm_from_samples(g.eval, vals, with_midpoints(g.breakpoints), grid);
}

double sup_norm(const PeriodicFunction& f, const GridSpec& grid) {
  if (auto p = f.spectrum()) return sup_norm(*p, grid);
  return sup_norm(PiecewiseSignal{[&f](double x) { return f(x); }, f.breakpoints()}, grid);
}

double lp_norm(const PiecewiseSignal& g, double p, const GridSpec& grid) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (std::isinf(p)) return sup_norm(g, grid);
  grid.validate();
  std::vector<double> knots = g.breakpoints;
  for (int m = 0; m < grid.nodes; ++m) knots.push_back(kTwoPi * m / grid.nodes);
  knots = sorted_unique(std::move(knots));
  knots.push_back(knots.front() + kTwoPi);

  auto gauss = [&](double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t q = 0; q < kGaussX.size(); ++q) s += kGaussW[q] * std::pow(std::abs(g.eval(mid + half * kGaussX[q])), p);
    return half * s;
  };
  // |g|^p has a kink at every sign change of g unless p is an even integer.
  const bool split_at_roots = !(p == std::round(p) && static_cast<long>(p) % 2 == 0);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i], b = knots[i + 1];
    if (split_at_roots) {
      const double eps = 1e-12 * (b - a);
      double lo = a + eps, hi = b - eps;
      const double glo = g.eval(lo), ghi = g.eval(hi);
      if (glo * ghi < 0.0) {
        for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
          const double mid = 0.5 * (lo + hi);
          (g.eval(mid) * glo < 0.0 ? hi : lo) = mid;
        }
        const double root = 0.5 * (lo + hi);
        total += gauss(a, root) + gauss(root, b);
        continue;
      }
    }
    total += gauss(a, b);
  }
  return std::pow(total, 1.0 / p);
}

double lp_norm(const TrigPolyd& poly, double p, const GridSpec& grid) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (std::isinf(p)) return sup_norm(poly, grid);
  grid.validate();
  const auto nodes = std::max<Eigen::Index>(grid.nodes, 8 * (poly.stored_degree() + 1));
  if (p == std::round(p) && static_cast<long>(p) % 2 == 0) {
    // |poly|^p is a trigonometric polynomial: the trapezoid rule is exact once nodes exceed p * degree.
    const Eigen::VectorXd v = poly.sample(nodes);
    const double total = v.array().pow(p).sum() * kTwoPi / static_cast<double>(nodes);
    return std::pow(total, 1.0 / p);
  }
  return lp_norm(PiecewiseSignal{[&poly](double x) { return poly(x); }, {}},
                 p, GridSpec{static_cast<int>(nodes), grid.refine_depth});
}

double lp_norm(const PeriodicFunction& f, double p, const GridSpec& grid) {
  if (auto poly = f.spectrum()) return lp_norm(*poly, p, grid);
  return lp_norm(PiecewiseSignal{[&f](double x) { return f(x); }, f.breakpoints()}, p, grid);
}

QuadResult integrate(const std::function<double(double)>& g, double a, double b, double tol, std::size_t max_evals) {
  if (a == b) return {};
  if (!(a < b)) throw std::invalid_argument("integrate: need a < b");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be positive");

  struct Panel {
    double a, b, fa, fm, fb, whole, tol;
    int depth;
  };
  constexpr int kMaxDepth = 60;
  constexpr int kInitialPanels = 4;

  QuadResult res;
  auto simpson = [](double a, double b, double fa, double fm, double fb) { return (b - a) / 6.0 * (fa + 4.0 * fm + fb); };

  std::vector<Panel> stack;
  const double width = (b - a) / kInitialPanels;
  double fl = g(a);
  res.evaluations = 1;
  for (int i = 0; i < kInitialPanels; ++i) {
    const double pa = a + i * width;
    const double pb = i + 1 == kInitialPanels ? b : a + (i + 1) * width;
    const double fm = g(0.5 * (pa + pb));
    const double fr = g(pb);
    res.evaluations += 2;
    stack.push_back({pa, pb, fl, fm, fr, simpson(pa, pb, fl, fm, fr), tol / kInitialPanels, 0});
    fl = fr;
  }

  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = g(lm);
    const double frm = g(rm);
    res.evaluations += 2;
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    const bool accurate = std::abs(delta) <= 15.0 * p.tol;
    const bool exhausted = p.depth >= kMaxDepth || res.evaluations >= max_evals;
    if (accurate || exhausted) {
      res.value += left + right + delta / 15.0;
      res.err_estimate += std::abs(delta) / 15.0;
      if (!accurate) res.converged = false;
      continue;
    }
    stack.push_back({p.a, m, p.fa, flm, p.fm, left, 0.5 * p.tol, p.depth + 1});
    stack.push_back({m, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol, p.depth + 1});
  }
  return res;
}

namespace {

// Cohen-Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a_k using n terms.
double cvz_sum(const std::function<double(std::size_t)>& a, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(static_cast<std::size_t>(k));
    b = static_cast<double>(k + n) * static_cast<double>(k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

}  // namespace

SeriesResult alternating_series_sum(const std::function<double(std::size_t)>& term, double tol, std::size_t max_terms) {
  if (!(tol > 0.0)) throw std::invalid_argument("alternating_series_sum: tol must be positive");
  SeriesResult res;
  double sum = 0.0;
  for (std::size_t i = 0; i < max_terms; ++i) {
    const double t = term(i);
    if (std::abs(t) <= tol) {
      res.value = sum;
      res.err_estimate = std::abs(t);
      res.terms = i;
      return res;
    }
    sum += t;
  }
  // Slow decay: accelerate. The sign-normalised magnitudes are (-1)^k term(k).
  auto magnitude = [&term](std::size_t k) { return (k % 2 == 0 ? 1.0 : -1.0) * term(k); };
  const double coarse = cvz_sum(magnitude, 40);
  const double fine = cvz_sum(magnitude, 60);
  res.value = fine;
  res.err_estimate = std::abs(fine - coarse);
  res.terms = 60;
  res.accelerated = true;
  res.converged = res.err_estimate <= tol;
  return res;
}

SeriesResult monotone_series_sum(const std::function<double(std::size_t)>& term,
                                 const std::function<double(std::size_t)>& tail_integral, double tol,
                                 std::size_t max_terms) {
  if (!(tol > 0.0)) throw std::invalid_argument("monotone_series_sum: tol must be positive");
  SeriesResult res;
  double sum = 0.0;
  std::size_t n = 0;
  double t = term(0);
  while (t > 2.0 * tol && n < max_terms) {
    sum += t;
    ++n;
    t = term(n);
  }
  // sum_{i>=n} term(i) lies in [I(n), I(n) + term(n)].
  res.value = sum + tail_integral(n) + 0.5 * t;
  res.err_estimate = 0.5 * t;
  res.terms = n;
  res.converged = res.err_estimate <= tol;
  return res;
}

}  // namespace stechkin
