#include "stechkin/bestapprox.hpp"

#include "stechkin/trig.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stechkin {

namespace {

constexpr double kGolden = 0.6180339887498949;

// Rows [1, cos x, sin x, ..., cos (n-1)x, sin (n-1)x].
Eigen::MatrixXd basis_matrix(const std::vector<double>& xs, int n) {
  const auto rows = static_cast<Eigen::Index>(xs.size());
  Eigen::MatrixXd B(rows, 2 * n - 1);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double x = xs[std::size_t(i)];
    B(i, 0) = 1.0;
    for (int j = 1; j < n; ++j) {
      B(i, 2 * j - 1) = std::cos(j * x);
      B(i, 2 * j) = std::sin(j * x);
    }
  }
  return B;
}

TrigPolyd to_poly(const Eigen::VectorXd& c, int n) {
  TrigPolyd p(n - 1);
  p.a()(0) = 2.0 * c(0);
  for (int j = 1; j < n; ++j) {
    p.a()(j) = c(2 * j - 1);
    p.b()(j) = c(2 * j);
  }
  return p;
}

struct Discrete {
  std::vector<double> x;
  Eigen::VectorXd fx;
  Eigen::MatrixXd B;
};

Discrete make_discrete(const PeriodicFunction& f, std::vector<double> xs, int n) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(), [](double a, double b) { return b - a < 1e-13; }), xs.end());
  Discrete d;
  d.fx.resize(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) d.fx(Eigen::Index(i)) = f(xs[i]);
  d.B = basis_matrix(xs, n);
  d.x = std::move(xs);
  return d;
}

std::size_t nearest_index(const std::vector<double>& xs, double t) {
  auto it = std::lower_bound(xs.begin(), xs.end(), t);
  if (it == xs.end()) return xs.size() - 1;
  if (it == xs.begin()) return 0;
  const auto hi = static_cast<std::size_t>(it - xs.begin());
  return t - xs[hi - 1] <= xs[hi] - t ? hi - 1 : hi;
}

struct ExchangeState {
  std::vector<std::size_t> ref;  // sorted indices into Discrete::x
  Eigen::VectorXd coeffs;
  Eigen::VectorXd residual;
  double levelled = 0.0;
  int iterations = 0;
  bool converged = false;
};

void run_exchange(const Discrete& d, int n, ExchangeState& st, int max_iterations) {
  const int m = 2 * n;
  const double scale = std::max(1.0, d.fx.cwiseAbs().maxCoeff());
  Eigen::MatrixXd A(m, m);
  Eigen::VectorXd rhs(m);
  st.converged = false;
  for (; st.iterations < max_iterations; ++st.iterations) {
    for (int r = 0; r < m; ++r) {
      A.row(r).head(m - 1) = d.B.row(Eigen::Index(st.ref[std::size_t(r)]));
      A(r, m - 1) = r % 2 == 0 ? 1.0 : -1.0;
      rhs(r) = d.fx(Eigen::Index(st.ref[std::size_t(r)]));
    }
    const Eigen::VectorXd sol = A.partialPivLu().solve(rhs);
    st.coeffs = sol.head(m - 1);
    st.levelled = sol(m - 1);
    st.residual = d.fx - d.B * st.coeffs;

    // Entering point: largest residual, ties to the smallest x.
    std::size_t star = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < st.residual.size(); ++i) {
      if (std::abs(st.residual(i)) > best) {
        best = std::abs(st.residual(i));
        star = std::size_t(i);
      }
    }
    if (best <= std::abs(st.levelled) * (1.0 + 1e-12) + 1e-14 * scale ||
        std::binary_search(st.ref.begin(), st.ref.end(), star)) {
      st.converged = true;
      return;
    }

    // Keep the cyclic sign alternation: swap out the neighbour whose residual
    // has the entering point's sign.
    const auto pos = static_cast<int>(std::lower_bound(st.ref.begin(), st.ref.end(), star) - st.ref.begin());
    const int left = (pos - 1 + m) % m;
    const int right = pos % m;
    const bool same = (st.residual(Eigen::Index(st.ref[std::size_t(left)])) > 0) == (st.residual(Eigen::Index(star)) > 0);
    st.ref[std::size_t(same ? left : right)] = star;
    std::sort(st.ref.begin(), st.ref.end());
  }
}

// Golden-section maximiser of |g| on [a, b]; returns (x, |g(x)|).
std::pair<double, double> golden_argmax(const std::function<double(double)>& g, double a, double b, int depth) {
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = std::abs(g(c));
  double fd = std::abs(g(d));
  std::pair<double, double> best = fc >= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
  for (int it = 0; it < depth; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = std::abs(g(c));
      if (fc > best.second) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = std::abs(g(d));
      if (fd > best.second) best = {d, fd};
    }
  }
  return best;
}

// Refined local maxima of |residual| that reach at least half the largest one.
std::vector<std::pair<double, double>> refined_extrema(const Discrete& d, const Eigen::VectorXd& e,
                                                       const std::function<double(double)>& residual, int depth) {
  const std::size_t N = d.x.size();
  const double top = e.cwiseAbs().maxCoeff();
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < N; ++i) {
    const double v = std::abs(e(Eigen::Index(i)));
    const double l = std::abs(e(Eigen::Index((i + N - 1) % N)));
    const double r = std::abs(e(Eigen::Index((i + 1) % N)));
    if (v < 0.5 * top || v < l || v < r) continue;
    const double a = i == 0 ? d.x[N - 1] - kTwoPi : d.x[i - 1];
    const double b = i + 1 == N ? d.x[0] + kTwoPi : d.x[i + 1];
    auto best = golden_argmax(residual, a, b, depth);
    if (best.second < v) best = {d.x[i], v};
    out.emplace_back(wrap_angle(best.first), best.second);
  }
  return out;
}

int count_alternation(const Eigen::VectorXd& e, double level) {
  std::vector<int> signs;
  for (Eigen::Index i = 0; i < e.size(); ++i)
    if (std::abs(e(i)) >= level) signs.push_back(e(i) > 0 ? 1 : -1);
  if (signs.size() < 2) return static_cast<int>(signs.size());
  int changes = 0;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] != signs[(i + 1) % signs.size()]) ++changes;
  return changes;
}

}  // namespace

BestApproxResult best_uniform(const PeriodicFunction& f, int n, const ExchangeOptions& opt) {
  if (n < 1) throw std::invalid_argument("best_uniform: n must be >= 1");
  opt.grid.validate();
  BestApproxResult res;

  // A jump of size J forces error >= J/2 on continuous approximants; the
  // midline constant attains it for these two-valued functions.
  if (std::holds_alternative<kind::Step>(f.kind())) {
    res.method = ApproxMethod::Analytic;
    res.value = res.lower_bound = 0.5;
    res.minimizer = TrigPolyd::constant(0.5).padded(n - 1);
    return res;
  }
  if (std::holds_alternative<kind::FavardSign>(f.kind())) {
    res.method = ApproxMethod::Analytic;
    res.value = res.lower_bound = 1.0;
    res.minimizer = TrigPolyd(n - 1);
    return res;
  }

  std::vector<double> xs = f.breakpoints();
  for (int m = 0; m < opt.grid.nodes; ++m) xs.push_back(kTwoPi * m / opt.grid.nodes);
  Discrete d = make_discrete(f, xs, n);

  ExchangeState st;
  for (int m = 0; m < 2 * n; ++m) st.ref.push_back(nearest_index(d.x, kPi * m / n));
  std::sort(st.ref.begin(), st.ref.end());
  st.ref.erase(std::unique(st.ref.begin(), st.ref.end()), st.ref.end());
  for (std::size_t i = 0; st.ref.size() < std::size_t(2 * n); ++i)
    if (!std::binary_search(st.ref.begin(), st.ref.end(), i)) {
      st.ref.push_back(i);
      std::sort(st.ref.begin(), st.ref.end());
    }

  run_exchange(d, n, st, opt.max_iterations);
  auto residual_fn = [&](const TrigPolyd& p) { return [&f, p](double x) { return f(x) - p(x); }; };

  for (int round = 0; round < opt.augment_rounds; ++round) {
    const TrigPolyd p = to_poly(st.coeffs, n);
    const auto extrema = refined_extrema(d, st.residual, residual_fn(p), opt.grid.refine_depth);
    std::vector<double> ref_x;
    for (std::size_t i : st.ref) ref_x.push_back(d.x[i]);
    std::vector<double> grown = d.x;
    for (const auto& e : extrema) grown.push_back(e.first);
    d = make_discrete(f, grown, n);
    for (std::size_t r = 0; r < ref_x.size(); ++r) st.ref[r] = nearest_index(d.x, ref_x[r]);
    std::sort(st.ref.begin(), st.ref.end());
    run_exchange(d, n, st, opt.max_iterations);
  }

  res.minimizer = to_poly(st.coeffs, n);
  res.lower_bound = std::abs(st.levelled);
  res.iterations = st.iterations;
  double upper = st.residual.cwiseAbs().maxCoeff();
  for (const auto& e : refined_extrema(d, st.residual, residual_fn(res.minimizer), opt.grid.refine_depth))
    upper = std::max(upper, e.second);
  res.value = upper;
  res.alternation = count_alternation(st.residual, res.lower_bound * (1.0 - 1e-8));
  res.converged = st.converged && res.alternation >= 2 * n;
  return res;
}

BestApproxResult best_l2(const PeriodicFunction& f, int n, const GridSpec& grid) {
  if (n < 1) throw std::invalid_argument("best_l2: n must be >= 1");
  BestApproxResult res;
  res.method = ApproxMethod::ParsevalL2;
  res.minimizer = partial_sum(fourier_coeffs(f, n - 1, grid), n - 1);
  if (auto poly = f.spectrum()) {
    res.value = lp_norm(*poly - res.minimizer, 2.0, grid);
  } else {
    const TrigPolyd s = res.minimizer;
    res.value = lp_norm(PiecewiseSignal{[&f, s](double x) { return f(x) - s(x); }, f.breakpoints()}, 2.0, grid);
  }
  res.lower_bound = res.value;
  return res;
}

}  // namespace stechkin
