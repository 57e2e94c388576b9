#include "stechkin/harness/config.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace stechkin::harness {

namespace {

const std::vector<std::pair<Campaign, std::string>>& campaign_names() {
  static const std::vector<std::pair<Campaign, std::string>> names = {
      {Campaign::Constants, "Constants"},
      {Campaign::Theorem1Upper, "Theorem1Upper"},
      {Campaign::Theorem2Alpha, "Theorem2Alpha"},
      {Campaign::Theorem3PiOverN, "Theorem3PiOverN"},
      {Campaign::Theorem4SmallR, "Theorem4SmallR"},
      {Campaign::OmegaStarSharpness, "OmegaStarSharpness"},
      {Campaign::LowerBound, "LowerBound"},
      {Campaign::ConjectureSweep, "ConjectureSweep"},
      {Campaign::L2Chernykh, "L2Chernykh"},
      {Campaign::FavardEquality, "FavardEquality"},
      {Campaign::VpDirect, "VpDirect"},
  };
  return names;
}

std::string normalise(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != '_' && c != '-') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

}  // namespace

std::string to_string(Campaign c) {
  for (const auto& [k, name] : campaign_names())
    if (k == c) return name;
  throw std::logic_error("unknown campaign");
}

Campaign campaign_from_string(const std::string& name) {
  for (const auto& [k, n] : campaign_names())
    if (normalise(n) == normalise(name)) return k;
  throw std::invalid_argument("unknown campaign '" + name + "'");
}

std::vector<Campaign> all_campaigns() {
  std::vector<Campaign> out;
  for (const auto& entry : campaign_names()) out.push_back(entry.first);
  return out;
}

CampaignConfig default_config(Campaign c) {
  CampaignConfig cfg;
  cfg.campaign = c;
  switch (c) {
    case Campaign::Constants:
      cfg.n_range = {8};
      cfg.r_range = {1};
      cfg.alpha = {2.0};
      break;
    case Campaign::Theorem1Upper:
    case Campaign::VpDirect:
      cfg.n_range = {8, 12, 18, 24};
      cfg.r_range = {1, 2, 3, 4, 5, 6, 7, 8};
      cfg.alpha = {2.0};
      break;
    case Campaign::Theorem2Alpha:
      cfg.n_range = {8, 12};
      cfg.r_range = {1, 2, 3, 4, 5, 6};
      cfg.alpha = {1.25, 1.5, 1.75};
      break;
    case Campaign::Theorem3PiOverN:
    case Campaign::ConjectureSweep:
      cfg.n_range = {8, 12};
      cfg.r_range = {1, 2, 3, 4, 5, 6, 7, 8};
      cfg.alpha = {1.0};
      break;
    case Campaign::Theorem4SmallR:
      cfg.n_range = {8, 12};
      cfg.r_range = {1, 2, 3, 4, 5, 6};
      cfg.alpha = {1.0, 2.0};
      break;
    case Campaign::OmegaStarSharpness:
      cfg.n_range = {4, 8, 16};
      cfg.r_range = {2, 4, 6, 8, 10, 12, 14, 16};
      cfg.alpha = {1.0};
      break;
    case Campaign::LowerBound:
      cfg.n_range = {12, 16};
      cfg.r_range = {1, 2, 3, 4, 5, 6};
      cfg.alpha = {2.0};
      break;
    case Campaign::L2Chernykh:
      cfg.n_range = {8, 12};
      cfg.r_range = {1, 2, 3, 4, 5, 6};
      cfg.alpha = {2.0};
      break;
    case Campaign::FavardEquality:
      cfg.n_range = {4, 8, 16};
      cfg.r_range = {2, 4, 6, 8, 10, 12, 14, 16};
      cfg.alpha = {1.0};
      break;
  }
  return cfg;
}

void CampaignConfig::complete() {
  const CampaignConfig d = default_config(campaign);
  if (n_range.empty()) n_range = d.n_range;
  if (r_range.empty()) r_range = d.r_range;
  if (alpha.empty()) alpha = d.alpha;
  validate();
}

void CampaignConfig::validate() const {
  if (n_range.empty() || r_range.empty() || alpha.empty())
    throw std::invalid_argument("config: n, r and alpha ranges must be non-empty");
  if (std::any_of(n_range.begin(), n_range.end(), [](int n) { return n < 1; }))
    throw std::invalid_argument("config: n values must be >= 1");
  if (std::any_of(r_range.begin(), r_range.end(), [](int r) { return r < 1; }))
    throw std::invalid_argument("config: r values must be >= 1");
  if (std::any_of(alpha.begin(), alpha.end(), [](double a) { return !(a > 0.0); }))
    throw std::invalid_argument("config: alpha values must be positive");
  if (grid_nodes < 4) throw std::invalid_argument("config: grid_nodes must be >= 4");
  if (refine_depth < 0) throw std::invalid_argument("config: refine_depth must be >= 0");
  if (h_nodes < 1) throw std::invalid_argument("config: h_nodes must be >= 1");
}

double CampaignConfig::tolerance(const std::string& key, double fallback) const {
  auto it = tolerances.find(key);
  return it == tolerances.end() ? fallback : it->second;
}

CampaignConfig config_from_json(const nlohmann::json& doc, CampaignConfig base) {
  if (!doc.is_object()) throw std::invalid_argument("config: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "campaign") base.campaign = campaign_from_string(value.get<std::string>());
    else if (key == "n_range") base.n_range = value.get<std::vector<int>>();
    else if (key == "r_range") base.r_range = value.get<std::vector<int>>();
    else if (key == "alpha") base.alpha = value.get<std::vector<double>>();
    else if (key == "corpus") base.corpus = value.get<std::vector<std::string>>();
    else if (key == "tolerances") base.tolerances = value.get<std::map<std::string, double>>();
    else if (key == "seed") base.seed = value.get<std::uint64_t>();
    else if (key == "grid_nodes") base.grid_nodes = value.get<int>();
    else if (key == "refine_depth") base.refine_depth = value.get<int>();
    else if (key == "h_nodes") base.h_nodes = value.get<int>();
    else if (key == "include_l2") base.include_l2 = value.get<bool>();
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  return base;
}

nlohmann::ordered_json config_to_json(const CampaignConfig& cfg) {
  nlohmann::ordered_json j;
  j["campaign"] = to_string(cfg.campaign);
  j["n_range"] = cfg.n_range;
  j["r_range"] = cfg.r_range;
  j["alpha"] = cfg.alpha;
  j["corpus"] = cfg.corpus;
  j["tolerances"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : cfg.tolerances) j["tolerances"][k] = v;
  j["seed"] = cfg.seed;
  j["grid_nodes"] = cfg.grid_nodes;
  j["refine_depth"] = cfg.refine_depth;
  j["h_nodes"] = cfg.h_nodes;
  j["include_l2"] = cfg.include_l2;
  return j;
}

}  // namespace stechkin::harness
