#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace stechkin::harness {

enum class Campaign {
  Constants,
  Theorem1Upper,
  Theorem2Alpha,
  Theorem3PiOverN,
  Theorem4SmallR,
  OmegaStarSharpness,
  LowerBound,
  ConjectureSweep,
  L2Chernykh,
  FavardEquality,
  VpDirect,
};

std::string to_string(Campaign c);
/// Accepts the enumerator name ("Theorem1Upper") or its snake_case form ("theorem1_upper").
Campaign campaign_from_string(const std::string& name);
std::vector<Campaign> all_campaigns();

struct CampaignConfig {
  Campaign campaign = Campaign::Constants;
  std::vector<int> n_range;
  std::vector<int> r_range;
  std::vector<double> alpha;
  /// Corpus kind names; empty selects the default corpus.
  std::vector<std::string> corpus;
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 12345;
  int grid_nodes = 4096;
  int refine_depth = 40;
  int h_nodes = 256;
  /// Also check the p = 2 version in the uniform sweeps.
  bool include_l2 = false;

  /// Fills empty ranges with the campaign defaults, then validates.
  void complete();
  void validate() const;
  double tolerance(const std::string& key, double fallback) const;
};

/// Campaign defaults for n, r and alpha.
CampaignConfig default_config(Campaign c);

/// Overlays keys present in `doc` onto `base`. Unknown keys are rejected.
CampaignConfig config_from_json(const nlohmann::json& doc, CampaignConfig base = {});
nlohmann::ordered_json config_to_json(const CampaignConfig& cfg);

}  // namespace stechkin::harness
