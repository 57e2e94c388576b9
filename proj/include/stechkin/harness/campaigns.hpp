#pragma once

#include "stechkin/harness/config.hpp"
#include "stechkin/harness/report.hpp"

namespace stechkin::harness {

/// Completes the config with campaign defaults and dispatches. Rows come back sorted.
VerificationReport run_campaign(CampaignConfig cfg);

/// Reference constants, identities and brackets of the constants module.
VerificationReport run_constants_campaign(const CampaignConfig& cfg);

/// E_{n-1}(f) / omega_r(f, alpha pi / n) over the corpus, against the
/// campaign's constant times gamma*_r. Serves Theorem1Upper, Theorem2Alpha,
/// Theorem3PiOverN, Theorem4SmallR and ConjectureSweep.
VerificationReport run_stechkin_sweep(const CampaignConfig& cfg);

/// ||f - v_{m,n}(f)|| with m = floor(8n/9) against 5 gamma*_r omega_r(f, 2pi/n) for every r,
/// plus the orthogonality of f - v_{m,n}(f) to T_m.
VerificationReport run_vp_direct_check(const CampaignConfig& cfg);

/// omega*_{2k}(cos nx, pi/n) against (1 - mu^2) / gamma*, the bracket, and
/// ||(I - U_h) f|| = gamma* omega* <= gamma* omega on the corpus.
VerificationReport run_omega_star_sharpness(const CampaignConfig& cfg);

/// Step and smoothed step extremal values.
VerificationReport run_lower_bound(const CampaignConfig& cfg);

/// E_{n-1}(f)_2 against omega_r(f, 2pi/n)_2 / sqrt(C(2r, r)) and the L2 optimality of s_{n-1}.
VerificationReport run_l2_chernykh(const CampaignConfig& cfg);

/// Second differences of sgn sin(nx) at steps i pi / n and the resulting U_h'' eigen-relation.
VerificationReport run_favard_equality_check(const CampaignConfig& cfg);

/// The constant c in E_{n-1} <= c gamma*_r omega_r(f, alpha pi / n) tested by a sweep campaign.
double sweep_constant(Campaign c, int r, double alpha);

}  // namespace stechkin::harness
