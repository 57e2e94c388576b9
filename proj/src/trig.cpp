#include "stechkin/trig.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace stechkin {

namespace {

TrigPolyd step_coeffs(int M) {
  TrigPolyd p(M);
  p.a()(0) = 1.0;
  for (int j = 1; j <= M; j += 2) p.b()(j) = -2.0 / (j * kPi);
  return p;
}

TrigPolyd favard_sign_coeffs(int n, int M) {
  TrigPolyd p(M);
  for (int odd = 1; odd * n <= M; odd += 2) p.b()(odd * n) = 4.0 / (odd * kPi);
  return p;
}

TrigPolyd trapezoid_coeffs(const PeriodicFunction& f, int M, const GridSpec& grid) {
  const int nodes = std::max(4 * M + 4, grid.nodes);
  std::vector<double> values(static_cast<std::size_t>(nodes));
  for (int m = 0; m < nodes; ++m) values[static_cast<std::size_t>(m)] = f(kTwoPi * m / nodes);
  std::vector<std::complex<double>> spectrum;
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, values);
  TrigPolyd p(M);
  p.a()(0) = 2.0 * spectrum[0].real() / nodes;
  for (int j = 1; j <= M; ++j) {
    p.a()(j) = 2.0 * spectrum[static_cast<std::size_t>(j)].real() / nodes;
    p.b()(j) = -2.0 * spectrum[static_cast<std::size_t>(j)].imag() / nodes;
  }
  return p;
}

}  // namespace

FourierCoeffs fourier_coeffs(const PeriodicFunction& f, int M, const GridSpec& grid) {
  if (M < 0) throw std::invalid_argument("fourier_coeffs: M must be >= 0");
  grid.validate();
  TrigPolyd base;
  bool closed_form = true;
  if (std::holds_alternative<kind::Step>(f.kind())) {
    base = step_coeffs(M);
  } else if (const auto* s = std::get_if<kind::SmoothedStep>(&f.kind())) {
    base = step_coeffs(M).multiplied([eps = s->eps](Eigen::Index j) {
      return j == 0 ? 1.0 : std::sin(static_cast<double>(j) * eps) / (static_cast<double>(j) * eps);
    });
  } else if (const auto* fs = std::get_if<kind::FavardSign>(&f.kind())) {
    base = favard_sign_coeffs(fs->n, M);
  } else if (const auto* d = std::get_if<kind::Sampled>(&f.kind())) {
    base = d->data->interpolant.truncated(M);
  } else {
    closed_form = false;
  }
  if (!closed_form) return {trapezoid_coeffs(f, M, grid), M};
  if (f.shift() != 0.0) base = base.shifted(f.shift());
  return {std::move(base), M};
}

TrigPolyd partial_sum(const FourierCoeffs& c, int i) {
  if (i < 0 || i > c.cutoff) throw std::invalid_argument("partial_sum: degree outside [0, M]");
  return c.coeffs.truncated(i);
}

TrigPolyd vallee_poussin(const FourierCoeffs& c, int m, int n) {
  if (m < 0 || m >= n || n > c.cutoff + 1)
    throw std::invalid_argument("vallee_poussin: need 0 <= m < n <= M + 1");
  TrigPolyd out = c.coeffs.truncated(n - 1);
  for (int j = m + 1; j < n; ++j) {
    const double w = static_cast<double>(n - j) / (n - m);
    out.a()(j) *= w;
    out.b()(j) *= w;
  }
  return out;
}

TrigPolyd fejer_sum(const FourierCoeffs& c, int n) { return vallee_poussin(c, 0, n); }

namespace {

constexpr std::array<double, 8> kGaussX = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                           -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                           0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGaussW = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                           0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                           0.2223810344533745, 0.1012285362903763};

// Zeros of sin(xt) sin(t) in (lo, hi], merged and sorted, with hi appended.
std::vector<double> product_kinks(double x, double lo, double hi) {
  std::vector<double> pts;
  const double p1 = kPi / x;
  for (auto k = static_cast<long>(std::floor(lo / p1)) + 1; k * p1 < hi; ++k) pts.push_back(k * p1);
  for (auto k = static_cast<long>(std::floor(lo / kPi)) + 1; k * kPi < hi; ++k) pts.push_back(k * kPi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(), [](double a, double b) { return b - a < 1e-12; }), pts.end());
  pts.push_back(hi);
  return pts;
}

// Mean of |sin(xt) sin(t)| over [lo, hi], Gauss-Legendre on each smooth piece.
double oscillation_mean(double x, double lo, double hi) {
  double total = 0.0;
  double a = lo;
  for (double b : product_kinks(x, lo, hi)) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t q = 0; q < kGaussX.size(); ++q) {
      const double t = mid + half * kGaussX[q];
      total += half * kGaussW[q] * std::abs(std::sin(x * t) * std::sin(t));
    }
    a = b;
  }
  return total / (hi - lo);
}

}  // namespace

QuadResult ell_function(double x, double tol) {
  if (!(x >= 0.0)) throw std::invalid_argument("ell_function: x must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("ell_function: tol must be positive");
  if (x == 0.0) return {};

  // Cutoff on a multiple of 2pi so the mean over [T/2, T] sees whole periods
  // of the sin(t) factor; large enough that the pi/T^2 term of the tail
  // estimate stays below tol/2.
  const double T = kTwoPi * std::ceil(std::max({2000.0, 200.0 * x, 2.0 / std::sqrt(tol)}) / kTwoPi);
  const std::vector<double> kinks = product_kinks(x, 0.0, T);
  const double piece_tol = 0.5 * tol * kPi / 2.0 / static_cast<double>(kinks.size());

  auto g = [x](double t) {
    if (t == 0.0) return x;
    return std::abs(std::sin(x * t) * std::sin(t)) / (t * t);
  };

  QuadResult res;
  double a = 0.0;
  for (double b : kinks) {
    const QuadResult piece = integrate(g, a, b, piece_tol, 200'000);
    res.value += piece.value;
    res.err_estimate += piece.err_estimate;
    res.evaluations += piece.evaluations;
    res.converged = res.converged && piece.converged;
    a = b;
  }

  // Tail: integral_T^inf g ~ M / T with M the mean of the oscillating factor.
  const double mean = oscillation_mean(x, 0.5 * T, T);
  const double mean_late = oscillation_mean(x, 0.75 * T, T);
  res.value += mean / T;
  res.err_estimate += std::abs(mean - mean_late) / T + kPi / (T * T);

  res.value *= 2.0 / kPi;
  res.err_estimate *= 2.0 / kPi;
  res.converged = res.converged && res.err_estimate <= tol;
  return res;
}

QuadResult lebesgue_constant(int N, double tol) {
  if (N < 0) throw std::invalid_argument("lebesgue_constant: N must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("lebesgue_constant: tol must be positive");
  const double w = N + 0.5;
  auto kernel = [N, w](double t) {
    if (t == 0.0) return 2.0 * N + 1.0;
    return std::abs(std::sin(w * t)) / std::sin(0.5 * t);
  };
  QuadResult res;
  double a = 0.0;
  for (int j = 1; j <= N + 1; ++j) {
    const double b = j <= N ? j * kPi / w : kPi;
    const QuadResult piece = integrate(kernel, a, b, tol * kPi / (N + 1));
    res.value += piece.value;
    res.err_estimate += piece.err_estimate;
    res.evaluations += piece.evaluations;
    res.converged = res.converged && piece.converged;
    a = b;
  }
  res.value /= kPi;
  res.err_estimate /= kPi;
  return res;
}

}  // namespace stechkin
