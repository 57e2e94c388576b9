#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace stechkin {

/// Real trigonometric polynomial of stored degree n,
///
///   tau(x) = a_0/2 + sum_{j=1}^{n} (a_j cos jx + b_j sin jx).
///
/// Both coefficient vectors have length n+1; b(0) is kept at zero. Arithmetic
/// pads the shorter operand, so polynomials of different stored degree mix
/// freely. Evaluation is exact (no grid).
template <typename Scalar>
class TrigPoly {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Index = Eigen::Index;
  using Complex = std::complex<Scalar>;

  TrigPoly() : a_(Vector::Zero(1)), b_(Vector::Zero(1)) {}

  explicit TrigPoly(Index n) {
    if (n < 0) throw std::invalid_argument("TrigPoly: negative degree");
    a_ = Vector::Zero(n + 1);
    b_ = Vector::Zero(n + 1);
  }

  TrigPoly(Vector a, Vector b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() == 0 || a_.size() != b_.size())
      throw std::invalid_argument("TrigPoly: coefficient vectors must be non-empty and of equal length");
    b_(0) = Scalar(0);
  }

  static TrigPoly constant(Scalar c) {
    TrigPoly p(0);
    p.a_(0) = Scalar(2) * c;
    return p;
  }
  static TrigPoly cosine(Index n) {
    TrigPoly p(n);
    if (n == 0) p.a_(0) = Scalar(2);
    else p.a_(n) = Scalar(1);
    return p;
  }
  static TrigPoly sine(Index n) {
    if (n < 1) throw std::invalid_argument("TrigPoly::sine: frequency must be >= 1");
    TrigPoly p(n);
    p.b_(n) = Scalar(1);
    return p;
  }

  Index stored_degree() const { return a_.size() - 1; }

  /// Index of the highest nonzero coefficient pair.
  Index degree() const {
    for (Index j = stored_degree(); j > 0; --j)
      if (a_(j) != Scalar(0) || b_(j) != Scalar(0)) return j;
    return 0;
  }

  const Vector& a() const { return a_; }
  const Vector& b() const { return b_; }
  Vector& a() { return a_; }
  Vector& b() { return b_; }

  Scalar operator()(Scalar x) const {
    using std::cos;
    using std::sin;
    Scalar sum = a_(0) / Scalar(2);
    const Complex step(cos(x), sin(x));
    Complex z = step;
    for (Index j = 1; j <= stored_degree(); ++j) {
      sum += a_(j) * z.real() + b_(j) * z.imag();
      // Resynchronise the rotation every 32 steps to bound drift.
      if ((j & 31) == 31) z = Complex(cos(Scalar(j + 1) * x), sin(Scalar(j + 1) * x));
      else z *= step;
    }
    return sum;
  }

  /// Applies a Fourier multiplier: the coefficient of e^{ijx} is multiplied by
  /// m(j), with m(-j) = conj(m(j)) implied so the result stays real.
  template <typename Multiplier>
  TrigPoly multiplied(Multiplier&& m) const {
    TrigPoly out(stored_degree());
    out.a_(0) = a_(0) * std::real(Complex(m(Index(0))));
    for (Index j = 1; j <= stored_degree(); ++j) {
      const Complex z = Complex(a_(j), -b_(j)) * Complex(m(j));
      out.a_(j) = z.real();
      out.b_(j) = -z.imag();
    }
    return out;
  }

  TrigPoly derivative(int order = 1) const {
    if (order < 0) throw std::invalid_argument("TrigPoly::derivative: negative order");
    return multiplied([order](Index j) { return std::pow(Complex(0, Scalar(j)), order); });
  }

  /// tau(x + s).
  TrigPoly shifted(Scalar s) const {
    return multiplied([s](Index j) { return std::polar(Scalar(1), Scalar(j) * s); });
  }

  TrigPoly truncated(Index m) const {
    if (m < 0) throw std::invalid_argument("TrigPoly::truncated: negative degree");
    TrigPoly out(m);
    const Index k = std::min(m, stored_degree());
    out.a_.head(k + 1) = a_.head(k + 1);
    out.b_.head(k + 1) = b_.head(k + 1);
    return out;
  }

  TrigPoly padded(Index m) const { return m <= stored_degree() ? *this : truncated(m); }

  /// Values at the M uniform nodes 2*pi*m/M, by one unscaled inverse FFT.
  /// Frequencies above M/2 are folded, so the node values stay exact.
  Vector sample(Index nodes) const {
    if (nodes < 1) throw std::invalid_argument("TrigPoly::sample: need at least one node");
    const auto N = static_cast<std::size_t>(nodes);
    std::vector<Complex> spectrum(N, Complex(0));
    spectrum[0] += Complex(a_(0) / Scalar(2));
    for (Index j = 1; j <= stored_degree(); ++j) spectrum[static_cast<std::size_t>(j % nodes)] += Complex(a_(j), -b_(j));
    // The FFT object caches its twiddle tables per size.
    thread_local Eigen::FFT<Scalar> fft = [] {
      Eigen::FFT<Scalar> f;
      f.SetFlag(Eigen::FFT<Scalar>::Unscaled);
      return f;
    }();
    Vector out(nodes);
    if (N % 2 == 0 && N >= 4) {
      // Hermitian part only: a real transform of half the length.
      std::vector<Complex> half(N / 2 + 1);
      for (std::size_t k = 0; k <= N / 2; ++k) half[k] = (spectrum[k] + std::conj(spectrum[(N - k) % N])) / Scalar(2);
      std::vector<Scalar> values;
      fft.SetFlag(Eigen::FFT<Scalar>::HalfSpectrum);
      fft.inv(values, half, nodes);
      fft.ClearFlag(Eigen::FFT<Scalar>::HalfSpectrum);
      for (Index m = 0; m < nodes; ++m) out(m) = values[static_cast<std::size_t>(m)];
      return out;
    }
    std::vector<Complex> values;
    fft.inv(values, spectrum);
    for (Index m = 0; m < nodes; ++m) out(m) = values[static_cast<std::size_t>(m)].real();
    return out;
  }

  /// Squared L2 norm over one period, by Parseval.
  Scalar l2_norm_squared() const {
    const Scalar pi = Scalar(EIGEN_PI);
    Scalar s = Scalar(2) * pi * (a_(0) / Scalar(2)) * (a_(0) / Scalar(2));
    for (Index j = 1; j <= stored_degree(); ++j) s += pi * (a_(j) * a_(j) + b_(j) * b_(j));
    return s;
  }

  TrigPoly& operator+=(const TrigPoly& o) { return axpy(Scalar(1), o); }
  TrigPoly& operator-=(const TrigPoly& o) { return axpy(Scalar(-1), o); }
  TrigPoly& operator*=(Scalar c) {
    a_ *= c;
    b_ *= c;
    return *this;
  }

  friend TrigPoly operator+(TrigPoly l, const TrigPoly& r) { return l += r; }
  friend TrigPoly operator-(TrigPoly l, const TrigPoly& r) { return l -= r; }
  friend TrigPoly operator-(TrigPoly p) { return p *= Scalar(-1); }
  friend TrigPoly operator*(TrigPoly p, Scalar c) { return p *= c; }
  friend TrigPoly operator*(Scalar c, TrigPoly p) { return p *= c; }

 private:
  TrigPoly& axpy(Scalar c, const TrigPoly& o) {
    if (o.stored_degree() > stored_degree()) *this = padded(o.stored_degree());
    const Index k = o.stored_degree() + 1;
    a_.head(k) += c * o.a_;
    b_.head(k) += c * o.b_;
    return *this;
  }

  Vector a_;
  Vector b_;
};

using TrigPolyd = TrigPoly<double>;

}  // namespace stechkin
