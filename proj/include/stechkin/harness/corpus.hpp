#pragma once

#include "stechkin/fncore.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stechkin::harness {

struct CorpusEntry {
  std::string id;
  PeriodicFunction f;
  bool smooth = false;  ///< band-limited, suitable for spectral differentiation
};

/// cos_n, step, smoothed_step_1e-2, smoothed_step_1e-3, favard_sign_n,
/// random_trig, smoothed_noise.
std::vector<std::string> default_corpus_kinds();

/// Instantiates the corpus for a given n. Besides the default kinds,
/// "smoothed_step:<eps>" selects a custom ramp width. random_trig expands to
/// ten polynomials of degree 2n; all randomness derives from `seed`.
std::vector<CorpusEntry> build_corpus(const std::vector<std::string>& kinds, int n, std::uint64_t seed,
                                      const GridSpec& grid = {});

/// Uniform double in [-1, 1) from a 64-bit draw; identical on every platform.
double signed_unit(std::uint64_t draw);

}  // namespace stechkin::harness
