#include "stechkin/harness/corpus.hpp"

#include "stechkin/smoothness.hpp"

#include <random>
#include <stdexcept>

namespace stechkin::harness {

namespace {

constexpr int kRandomPolys = 10;
constexpr int kNoiseSamples = 256;

std::string eps_label(double eps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", eps);
  return buf;
}

}  // namespace

double signed_unit(std::uint64_t draw) { return 2.0 * static_cast<double>(draw >> 11) * 0x1p-53 - 1.0; }

std::vector<std::string> default_corpus_kinds() {
  return {"cos_n", "step", "smoothed_step_1e-2", "smoothed_step_1e-3", "favard_sign_n", "random_trig", "smoothed_noise"};
}

std::vector<CorpusEntry> build_corpus(const std::vector<std::string>& kinds, int n, std::uint64_t seed,
                                      const GridSpec& grid) {
  if (n < 1) throw std::invalid_argument("build_corpus: n must be >= 1");
  const std::vector<std::string>& use = kinds.empty() ? default_corpus_kinds() : kinds;
  std::vector<CorpusEntry> out;
  for (const std::string& k : use) {
    if (k == "cos_n") {
      out.push_back({"cos_n", PeriodicFunction::cos_n(n), true});
    } else if (k == "step") {
      out.push_back({"step", PeriodicFunction::step(), false});
    } else if (k == "smoothed_step_1e-2" || k == "smoothed_step_1e-3" || k.rfind("smoothed_step:", 0) == 0) {
      const double eps = k == "smoothed_step_1e-2" ? 1e-2 : k == "smoothed_step_1e-3" ? 1e-3 : std::stod(k.substr(14));
      out.push_back({"smoothed_step_" + eps_label(eps), PeriodicFunction::smoothed_step(eps), false});
    } else if (k == "favard_sign_n") {
      out.push_back({"favard_sign_n", PeriodicFunction::favard_sign(n), false});
    } else if (k == "random_trig") {
      std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(n + 1));
      for (int t = 0; t < kRandomPolys; ++t) {
        TrigPolyd p(2 * n);
        for (int j = 0; j <= 2 * n; ++j) {
          const double scale = 1.0 / std::max(j, 1);
          p.a()(j) = signed_unit(rng()) * scale;
          if (j > 0) p.b()(j) = signed_unit(rng()) * scale;
        }
        out.push_back({"random_trig_" + std::to_string(t), PeriodicFunction::trig_poly(std::move(p)), true});
      }
    } else if (k == "smoothed_noise") {
      std::mt19937_64 rng(seed ^ 0xD1B54A32D192ED03ULL);
      std::vector<double> v(kNoiseSamples);
      for (double& x : v) x = signed_unit(rng());
      const PeriodicFunction noise = PeriodicFunction::sampled(std::move(v));
      out.push_back({"smoothed_noise", steklov(noise, kTwoPi / 32.0, SteklovOrder::two(), 1, grid), true});
    } else {
      throw std::invalid_argument("build_corpus: unknown corpus kind '" + k + "'");
    }
  }
  return out;
}

}  // namespace stechkin::harness
