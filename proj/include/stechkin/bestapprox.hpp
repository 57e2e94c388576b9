#pragma once

#include "stechkin/fncore.hpp"

namespace stechkin {

enum class ApproxMethod {
  ExchangeUniform,  ///< discrete minimax by single-point exchange
  ParsevalL2,       ///< partial Fourier sum
  Analytic,         ///< known value for jump functions (half the largest jump)
};

struct BestApproxResult {
  double value = 0.0;        ///< upper bound: sup of the residual of `minimizer`
  double lower_bound = 0.0;  ///< levelled error on the final reference
  TrigPolyd minimizer;
  ApproxMethod method = ApproxMethod::ExchangeUniform;
  int alternation = 0;  ///< sign-alternating near-extremal residual points
  bool converged = true;
  int iterations = 0;
};

struct ExchangeOptions {
  GridSpec grid;
  int augment_rounds = 2;
  int max_iterations = 20000;
};

/// E_{n-1}(f) in the uniform norm, n >= 1. Step and FavardSign return their
/// exact values; other kinds are solved on the grid (plus breakpoints), then
/// re-solved on grids augmented with refined residual extrema.
BestApproxResult best_uniform(const PeriodicFunction& f, int n, const ExchangeOptions& opt = {});

/// E_{n-1}(f)_2 = ||f - s_{n-1}(f)||_2.
BestApproxResult best_l2(const PeriodicFunction& f, int n, const GridSpec& grid = {});

}  // namespace stechkin
