#pragma once

#include "stechkin/fncore.hpp"

namespace stechkin {

/// Fourier coefficients of a function up to the cutoff degree, in TrigPoly layout.
struct FourierCoeffs {
  TrigPolyd coeffs;
  int cutoff = 0;
};

/// a_j, b_j for j <= M. Step, SmoothedStep and FavardSign use closed forms;
/// Sampled data uses its discrete Fourier transform; the remaining kinds use
/// the trapezoid rule on max(4M+4, grid.nodes) nodes.
FourierCoeffs fourier_coeffs(const PeriodicFunction& f, int M, const GridSpec& grid = {});

/// s_i(f). Rejects i outside [0, M].
TrigPolyd partial_sum(const FourierCoeffs& c, int i);

/// v_{m,n} = (s_m + ... + s_{n-1}) / (n - m); requires 0 <= m < n <= M + 1.
TrigPolyd vallee_poussin(const FourierCoeffs& c, int m, int n);

/// sigma_n = v_{0,n}.
TrigPolyd fejer_sum(const FourierCoeffs& c, int n);

/// l(x) = (2/pi) * integral_0^inf |sin(xt) sin(t)| / t^2 dt, the norm of the
/// de la Vallee Poussin operator with (n+m)/(n-m) = x.
QuadResult ell_function(double x, double tol = 1e-8);

/// L_N = (1/pi) * integral_0^pi |sin((N+1/2)t)| / sin(t/2) dt.
QuadResult lebesgue_constant(int N, double tol = 1e-12);

}  // namespace stechkin
