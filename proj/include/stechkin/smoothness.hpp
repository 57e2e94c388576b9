#pragma once

#include "stechkin/fncore.hpp"

#include <complex>

namespace stechkin {

enum class DifferenceFlavor {
  Forward,  ///< sum_{i=0}^{r} (-1)^i C(r,i) f(x + ih)
  Central,  ///< sum_{i=-k}^{k} (-1)^i C(2k,k+i) f(x + it), even order only
};

struct DifferenceSpec {
  int order = 1;
  double step = 0.0;
  DifferenceFlavor flavor = DifferenceFlavor::Forward;

  void validate() const;
};

double difference(const PeriodicFunction& f, const DifferenceSpec& spec, double x);

/// The difference as a signal in x, with the shifted breakpoints of f.
PiecewiseSignal difference_signal(const PeriodicFunction& f, const DifferenceSpec& spec);

/// Fourier multiplier of the difference on e^{ijx}: (1 - e^{ijh})^r, or
/// 4^k sin^{2k}(jt/2) for the central flavour.
std::complex<double> difference_multiplier(const DifferenceSpec& spec, double j);

/// ||difference||_p.
double difference_norm(const PeriodicFunction& f, const DifferenceSpec& spec, double p = kInfinity,
                       const GridSpec& grid = {});

enum class ModulusFlavor { Classic, Smoothed };

struct ModulusResult {
  double value = 0.0;
  double argmax_h = 0.0;
  int r = 0;
  double delta = 0.0;
  ModulusFlavor flavor = ModulusFlavor::Classic;
  double p = kInfinity;
};

struct ModulusOptions {
  GridSpec grid;
  int h_nodes = 256;   ///< uniform steps delta*m/h_nodes, m = 1..h_nodes
  int h_refine = 30;   ///< golden-section steps around the best steps
};

/// omega_r(f, delta)_p = sup_{0 < h <= delta} ||Delta_h^r f||_p.
ModulusResult modulus(const PeriodicFunction& f, int r, double delta, double p = kInfinity,
                      const ModulusOptions& opt = {});

/// omega*_{2k}(f, h): sup norm of the hat-kernel average of central differences.
ModulusResult smoothed_modulus(const PeriodicFunction& f, int k, double h, const GridSpec& grid = {});

/// Kernel family for Steklov averages: the L1-normalised B-spline of order 2k
/// on [-ih, ih] with knots spaced ih/k. k = 1 is the hat function.
struct SteklovOrder {
  int k = 1;

  static SteklovOrder two() { return {1}; }
  static SteklovOrder two_k(int k) { return {k}; }
};

/// (1/h)(1 - |t|/h) on [-h, h].
double hat_kernel(double h, double t);

/// Centred cardinal B-spline of order `order` with knot spacing s, unit mass.
double bspline_kernel(int order, double s, double t);

/// Fourier multiplier of I_{ih} at frequency j: sinc(j ih / (2k))^{2k}.
double steklov_multiplier(SteklovOrder order, double h, int i, double j);

/// I_{ih}(f) sampled on grid.nodes uniform nodes.
PeriodicFunction steklov(const PeriodicFunction& f, double h, SteklovOrder order = {}, int i = 1,
                         const GridSpec& grid = {});

/// I_{ih}(f)(x) by direct quadrature of the convolution.
double steklov_at(const PeriodicFunction& f, double h, SteklovOrder order, int i, double x, double tol = 1e-12);

/// W_h(f)(x) = gamma*_{2k} integral Delta^_t^{2k}(f, x) phi_h(t) dt by quadrature in t.
double operator_W_at(const PeriodicFunction& f, int k, double h, double x, double tol = 1e-12);

/// W_h(f) on the working grid. Spectral inputs use the per-frequency
/// quadrature of the kernel; piecewise inputs use operator_W_at at the nodes.
PeriodicFunction operator_W(const PeriodicFunction& f, int k, double h, const GridSpec& grid = {});

/// U_h(f) = 2 sum_{i=1}^{k} (-1)^{i+1} a_i I_{ih}(f) with hat-kernel averages.
PeriodicFunction operator_U(const PeriodicFunction& f, int k, double h, const GridSpec& grid = {});

/// f_h = gamma*_{2k} sum_{i=1}^{k} (-1)^{i+1} 2 C(2k,k+i) I_{ih}(f) with order-2k averages.
PeriodicFunction smoothing_fh(const PeriodicFunction& f, int k, double h, const GridSpec& grid = {});

/// ||f^{(order)}||_inf of the Fourier interpolant truncated at `cutoff`.
double derivative_sup_norm(const PeriodicFunction& f, int order, int cutoff = 64, const GridSpec& grid = {});

}  // namespace stechkin
