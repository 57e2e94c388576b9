// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "stechkin/bestapprox.hpp"
#include "stechkin/constants.hpp"
#include "stechkin/harness/campaigns.hpp"
#include "stechkin/harness/corpus.hpp"
#include "stechkin/harness/report.hpp"
#include "stechkin/smoothness.hpp"
#include "stechkin/trig.hpp"

#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace stechkin;
namespace sh = stechkin::harness;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds, <= 0 for none
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Tracks the worst |deviation| against a tolerance.
struct Worst {
  double dev = 0.0;
  bool ok = true;
  void equal(double computed, double reference, double tol) {
    const double d = std::abs(computed - reference);
    dev = std::max(dev, d);
    if (!(d <= tol)) ok = false;
  }
};

double binom(int n, int k) { return static_cast<double>(binomial(n, k)); }

Outcome ac1() {
  Worst w;
  w.equal(composite_vp_constant(2.0, 8.0 / 9, 1.0, LebesgueFactor::LogBound).value, 4.999144, 1e-5);
  w.equal(composite_vp_constant(2.0, 8.0 / 9, 1.0, LebesgueFactor::IntegerLogBound).value, 4.962628, 1e-5);
  w.equal(composite_vp_constant(2.0, 8.0 / 9, 1.0, LebesgueFactor::ExactEll, 1e-7).value, 4.946034, 1e-5);
  w.equal(lebesgue_constant(8).value, 2.137730, 1e-5);
  return {w.ok, fmt("max deviation %.2e (tol 1e-5)", w.dev)};
}

Outcome ac2() {
  Worst w;
  w.equal(small_r_constant(1, 1.0), 5.0 / 4, 1e-4);
  w.equal(small_r_constant(1, 2.0), 17.0 / 16, 1e-4);
  w.equal(small_r_constant(2, 1.0), 517.0 / 192, 1e-4);
  w.equal(small_r_constant(2, 2.0), 3397.0 / 3072, 1e-4);
  w.equal(small_r_constant(3, 2.0), 1.4552, 1e-4);
  return {w.ok, fmt("max deviation %.2e (tol 1e-4)", w.dev)};
}

Outcome ac3() {
  const double closed[] = {1.0,
                           kPi / 2,
                           kPi * kPi / 8,
                           std::pow(kPi, 3) / 24,
                           5 * std::pow(kPi, 4) / 384,
                           std::pow(kPi, 5) / 240,
                           61 * std::pow(kPi, 6) / 46080};
  Worst w;
  for (int r = 0; r <= 6; ++r) w.equal(favard(r, 1e-13).value, closed[r], 1e-10);
  return {w.ok, fmt("F_0..F_6 max deviation %.2e (tol 1e-10)", w.dev)};
}

Outcome ac4() {
  Worst w;
  for (int k = 1; k <= 30; ++k) w.equal(1.0 - mu_squared(k), one_minus_mu_squared_integral(k).value, 1e-9);
  int bracket_failures = 0;
  for (int k = 1; k <= 200; ++k) {
    const double gap = 1.0 - mu_squared(k), s = std::sqrt(2.0 * k);
    if (!(2.0 / (3.0 * s) < gap && gap < 5.0 / (4.0 * s))) ++bracket_failures;
  }
  return {w.ok && bracket_failures == 0,
          fmt("identity residual %.2e (tol 1e-9), bracket failures %g of 200", w.dev, bracket_failures)};
}

Outcome ac5() {
  Worst w;
  for (int n : {4, 8, 16})
    for (int k = 1; k <= 8; ++k)
      w.equal(smoothed_modulus(PeriodicFunction::cos_n(n), k, kPi / n).value * gamma_star_value(2 * k),
              1.0 - mu_squared(k), 1e-6);
  return {w.ok, fmt("max deviation %.2e (tol 1e-6)", w.dev)};
}

Outcome ac6() {
  Worst w;
  for (int n : {4, 8})
    for (double alpha : {0.25, 0.5, 1.0})
      for (int r = 1; r <= 8; ++r)
        w.equal(modulus(PeriodicFunction::cos_n(n), r, alpha * kPi / n).value,
                std::pow(2.0 * std::sin(alpha * kPi / 2), r), 1e-6);
  return {w.ok, fmt("max deviation %.2e (tol 1e-6)", w.dev)};
}

Outcome ac7() {
  const double eps = 1e-3;
  Worst exact;
  bool bounds = true;
  double worst_margin = kInfinity;
  for (int r = 1; r <= 6; ++r) {
    const double target = static_cast<double>(lower_bound_constant(r) * gamma_star(r));
    for (int n : {2 * r, 2 * r + 1, 12, 16}) {
      const double delta = kTwoPi / n;
      const double w_step = modulus(PeriodicFunction::step(), r, delta).value;
      const double e_step = best_uniform(PeriodicFunction::step(), n).value;
      exact.equal(w_step, binom(r - 1, (r - 1) / 2), 1e-12);
      exact.equal(e_step, 0.5, 1e-12);
      exact.equal(e_step / w_step, target, 1e-12);

      const auto smooth = PeriodicFunction::smoothed_step(eps);
      const double floor = 0.5 - 2.0 * (n - 1) * eps - 1e-3;
      const double e_smooth = best_uniform(smooth, n).lower_bound;
      const double w_smooth = modulus(smooth, r, delta).value;
      // Averaging cannot raise the modulus, so the ratio is at least target * floor / (1/2).
      const double margin = std::min(e_smooth - floor, e_smooth / w_smooth - target * floor / 0.5);
      worst_margin = std::min(worst_margin, margin);
      if (!(margin >= 0.0)) bounds = false;
    }
  }
  return {exact.ok && bounds,
          fmt("step exact to %.1e; smoothed step worst margin %.3e", exact.dev, worst_margin)};
}

Outcome ac8() {
  double worst = -kInfinity;
  std::size_t rows = 0;
  bool ok = true;
  for (sh::Campaign c : {sh::Campaign::Theorem1Upper, sh::Campaign::VpDirect}) {
    sh::CampaignConfig cfg;
    cfg.campaign = c;
    const auto rep = sh::run_campaign(cfg);
    ok = ok && rep.ok();
    for (const auto& row : rep.rows) {
      if (row.claim_id == "vp_direct.orthogonality") continue;
      worst = std::max(worst, row.computed - row.reference);
      ++rows;
    }
  }
  return {ok, fmt("%g bound rows, max (value - 5 gamma* omega) = %.3e", static_cast<double>(rows), worst)};
}

Outcome ac9() {
  test_support::Rng rng(909);
  // W_h = I - U_h pointwise.
  Worst decomposition;
  const std::vector<PeriodicFunction> fs = {PeriodicFunction::step(), PeriodicFunction::smoothed_step(1e-2),
                                            PeriodicFunction::favard_sign(8), PeriodicFunction::cos_n(8),
                                            PeriodicFunction::trig_poly(rng.trig_poly(16))};
  for (const auto& f : fs)
    for (int k = 1; k <= 4; ++k)
      for (double h : {kPi / 8, kPi / 16})
        for (int t = 0; t < 100; ++t) {
          const double x = rng.uniform(-kPi, kPi);
          double u = 0.0;
          for (int i = 1; i <= k; ++i)
            u += 2.0 * (i % 2 ? 1.0 : -1.0) * binom(2 * k, k + i) / binom(2 * k, k) *
                 steklov_at(f, h, SteklovOrder::two(), i, x);
          decomposition.equal(operator_W_at(f, k, h, x), f(x) - u, 1e-8);
        }

  // ||W_h f|| <= gamma*_{2k} omega_{2k}(f, h) on the default corpus at n = 8, h = pi/8.
  const int n = 8;
  const double h = kPi / n;
  const GridSpec grid{1024, 40};
  double w_margin = kInfinity;
  for (const auto& e : sh::build_corpus(sh::default_corpus_kinds(), n, 12345)) {
    for (int k = 1; k <= 3; ++k) {
      double wsup = 0.0;
      if (e.f.is_piecewise()) {
        std::vector<double> xs;
        for (int m = 0; m < grid.nodes; ++m) xs.push_back(kTwoPi * m / grid.nodes);
        for (double b : e.f.breakpoints())
          for (double d : {-1e-9, 1e-9}) xs.push_back(b + d);
        for (double x : xs) wsup = std::max(wsup, std::abs(operator_W_at(e.f, k, h, x)));
      } else {
        wsup = sup_norm(operator_W(e.f, k, h, grid), grid);
      }
      const double bound = gamma_star_value(2 * k) * modulus(e.f, 2 * k, h).value;
      w_margin = std::min(w_margin, bound + 1e-8 - wsup);
    }
  }

  // de la Vallee Poussin reproduction on T_m and orthogonality of f - v to T_m.
  Worst vp;
  for (int t = 0; t < 40; ++t) {
    const int m = rng.integer(0, 16), nn = rng.integer(m + 1, 32);
    const TrigPolyd tau = rng.trig_poly(m);
    TrigPolyd diff = vallee_poussin(fourier_coeffs(PeriodicFunction::trig_poly(tau), 32), m, nn);
    for (int j = 0; j <= m; ++j) {
      diff.a()(j) -= tau.a()(j);
      diff.b()(j) -= tau.b()(j);
    }
    vp.equal(sup_norm(diff, GridSpec{256, 30}), 0.0, 1e-10);
  }
  for (const auto& f : fs) {
    const int nn = 18, m = 8 * nn / 9;
    const TrigPolyd v = vallee_poussin(fourier_coeffs(f, nn), m, nn);
    std::vector<double> knots = {0.0, kTwoPi};
    for (double b : f.breakpoints()) knots.push_back(wrap_angle(b));
    std::sort(knots.begin(), knots.end());
    for (int j = 0; j <= m; ++j)
      for (bool sine : {false, true}) {
        if (sine && j == 0) continue;
        double c = 0.0;
        for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
          if (knots[i + 1] - knots[i] < 1e-14) continue;
          c += integrate([&](double x) { return (f(x) - v(x)) * (sine ? std::sin(j * x) : std::cos(j * x)); },
                         knots[i], knots[i + 1], 1e-13)
                   .value;
        }
        vp.equal(c / kPi, 0.0, 1e-10);
      }
  }
  const bool ok = decomposition.ok && w_margin >= 0.0 && vp.ok;
  return {ok, fmt("decomposition %.2e, W-bound margin %.2e, VP residual %.2e", decomposition.dev, w_margin, vp.dev)};
}

Outcome ac10() {
  sh::CampaignConfig cfg;
  cfg.campaign = sh::Campaign::L2Chernykh;
  const auto rep = sh::run_campaign(cfg);
  double worst = -kInfinity;
  int r_max = 0;
  std::size_t bound_rows = 0;
  for (const auto& row : rep.rows) {
    if (row.claim_id != "l2.chernykh") continue;
    ++bound_rows;
    worst = std::max(worst, row.computed - row.reference);
    r_max = std::max(r_max, row.params["r"].get<int>());
  }
  return {rep.ok() && r_max >= 6,
          fmt("%g Chernykh rows up to r = %g, max (E_2 - c omega_2) = %.3e; optimality rows hold",
              static_cast<double>(bound_rows), r_max, worst)};
}

Outcome ac11() {
  bool same = true;
  for (sh::Campaign c : {sh::Campaign::Constants, sh::Campaign::Theorem2Alpha}) {
    sh::CampaignConfig cfg;
    cfg.campaign = c;
    cfg.n_range = {8};
    cfg.corpus = {"cos_n", "step", "random_trig", "smoothed_noise"};
    const std::string a = sh::to_json(sh::run_campaign(cfg)).dump(2);
    const std::string b = sh::to_json(sh::run_campaign(cfg)).dump(2);
    same = same && a == b;
  }
  return {same, same ? "byte-identical JSON for Constants and Theorem2Alpha" : "JSON reports differ"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "constants table", 10.0, ac1},
      {2, "small-r table", 1.0, ac2},
      {3, "Favard constants", 0.0, ac3},
      {4, "mu identity and Wallis bracket", 0.0, ac4},
      {5, "smoothed modulus sharpness", 0.0, ac5},
      {6, "modulus closed form", 0.0, ac6},
      {7, "lower bound", 0.0, ac7},
      {8, "upper bound sweep and direct VP check", 300.0, ac8},
      {9, "operator identities", 0.0, ac9},
      {10, "L2 sanity", 0.0, ac10},
      {11, "determinism", 0.0, ac11},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.time_limit <= 0.0 || secs < c.time_limit;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::string limit = c.time_limit > 0.0 ? fmt(" (limit %gs)", c.time_limit) : "";
    std::printf("AC%-2d %s  %-40s %s; %.2fs%s\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(), o.detail.c_str(),
                secs, limit.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
