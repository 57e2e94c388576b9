#include "stechkin/harness/anchors.hpp"
#include "stechkin/harness/campaigns.hpp"
#include "stechkin/harness/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace sh = stechkin::harness;

namespace {

struct Options {
  std::string campaign;
  std::vector<int> n;
  std::vector<int> r;
  std::vector<double> alpha;
  std::vector<std::string> corpus;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid_nodes;
  std::optional<int> h_nodes;
  std::optional<double> tol;
  std::string config_file;
  bool include_l2 = false;
  std::string format = "json";
  std::string out_dir;
  bool plots = false;
};

sh::CampaignConfig make_config(const Options& o, sh::Campaign fallback) {
  sh::CampaignConfig cfg;
  cfg.campaign = fallback;
  if (!o.config_file.empty()) {
    std::ifstream in(o.config_file);
    if (!in) throw std::runtime_error("cannot read config '" + o.config_file + "'");
    cfg = sh::config_from_json(nlohmann::json::parse(in), cfg);
  }
  if (!o.campaign.empty()) cfg.campaign = sh::campaign_from_string(o.campaign);
  if (!o.n.empty()) cfg.n_range = o.n;
  if (!o.r.empty()) cfg.r_range = o.r;
  if (!o.alpha.empty()) cfg.alpha = o.alpha;
  if (!o.corpus.empty()) cfg.corpus = o.corpus;
  if (o.seed) cfg.seed = *o.seed;
  if (o.grid_nodes) cfg.grid_nodes = *o.grid_nodes;
  if (o.h_nodes) cfg.h_nodes = *o.h_nodes;
  if (o.tol) cfg.tolerances["constants"] = *o.tol;
  if (o.include_l2) cfg.include_l2 = true;
  cfg.complete();
  return cfg;
}

sh::ReportFormat parse_format(const std::string& f) { return f == "csv" ? sh::ReportFormat::Csv : sh::ReportFormat::Json; }

void print_rows(const sh::VerificationReport& rep) {
  for (const auto& row : rep.rows)
    std::printf("%-16s %-40s %-44s %.10g  ref %.10g  tol %.1e\n", sh::to_string(row.status).c_str(),
                row.claim_id.c_str(), row.params.dump().c_str(), row.computed, row.reference, row.tolerance);
}

int finish(const sh::VerificationReport& rep, const Options& o, bool table) {
  const auto format = parse_format(o.format);
  if (!o.out_dir.empty()) {
    for (const auto& p : sh::emit_report(rep, format, o.plots, o.out_dir)) std::cerr << "wrote " << p.string() << '\n';
    if (table) print_rows(rep);
  } else if (table) {
    print_rows(rep);
  } else if (format == sh::ReportFormat::Csv) {
    std::cout << sh::to_csv(rep);
  } else {
    std::cout << sh::to_json(rep).dump(2) << '\n';
  }
  const auto summary = sh::to_json(rep)["summary"];
  std::cerr << sh::to_string(rep.config.campaign) << ": " << summary["status_counts"].dump() << '\n';
  return rep.ok() ? 0 : 1;
}

void add_shared(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_file, "JSON config file; flags override its values")->check(CLI::ExistingFile);
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out-dir", o.out_dir, "Directory for report files (stdout otherwise)");
  cmd->add_flag("--plots", o.plots, "Also write the SVG plots (needs --out-dir)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of Jackson-Stechkin type inequalities"};
  app.require_subcommand(1);
  Options o;

  auto* constants = app.add_subcommand("constants", "Reproduce the reference constants");
  constants->add_option("--tol", o.tol, "Quadrature tolerance for the integral constants")->check(CLI::PositiveNumber);
  add_shared(constants, o);

  auto* sweep = app.add_subcommand("sweep", "Run one campaign over the corpus");
  sweep->add_option("--campaign", o.campaign, "Campaign name, e.g. Theorem1Upper")->required();
  sweep->add_option("--n", o.n, "Degrees n (approximation from T_{n-1})")->delimiter(',');
  sweep->add_option("--r", o.r, "Difference orders r")->delimiter(',');
  sweep->add_option("--alpha", o.alpha, "Step parameters alpha, delta = alpha pi / n")->delimiter(',');
  sweep->add_option("--corpus", o.corpus, "Corpus kinds")->delimiter(',');
  sweep->add_option("--seed", o.seed, "Seed for the random corpus members");
  sweep->add_option("--grid-nodes", o.grid_nodes, "Uniform evaluation nodes");
  sweep->add_option("--h-nodes", o.h_nodes, "Step-size nodes for the modulus search");
  sweep->add_flag("--include-l2", o.include_l2, "Also check the L2 version of the sweep");
  add_shared(sweep, o);

  auto* report = app.add_subcommand("report", "Run a campaign (or all) and write reports");
  report->add_option("--campaign", o.campaign, "Campaign name or 'all'")->default_val("Constants");
  add_shared(report, o);

  auto* anchors = app.add_subcommand("show-anchors", "List the claim anchors");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*anchors) {
      for (const auto& a : sh::anchors()) std::printf("%-32s %s\n", a.id.c_str(), a.description.c_str());
      return 0;
    }
    if (*constants) {
      o.campaign = "Constants";
      return finish(sh::run_campaign(make_config(o, sh::Campaign::Constants)), o, true);
    }
    if (*sweep) return finish(sh::run_campaign(make_config(o, sh::Campaign::Constants)), o, false);
    if (*report) {
      if (o.out_dir.empty()) o.out_dir = ".";
      if (o.campaign != "all") return finish(sh::run_campaign(make_config(o, sh::Campaign::Constants)), o, false);
      int code = 0;
      const std::string root = o.out_dir;
      for (sh::Campaign c : sh::all_campaigns()) {
        o.campaign = sh::to_string(c);
        o.out_dir = root + "/" + o.campaign;
        code = std::max(code, finish(sh::run_campaign(make_config(o, c)), o, false));
      }
      return code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
