#pragma once

#include "stechkin/harness/config.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace stechkin::harness {

enum class RowStatus { Pass, Fail, BoundHolds, BoundViolated, Degenerate, Exploratory };

std::string to_string(RowStatus s);

struct ReportRow {
  std::string claim_id;
  std::string paper_anchor;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  RowStatus status = RowStatus::Pass;
};

/// |computed - reference| <= tolerance.
ReportRow equality_row(std::string claim, std::string anchor, nlohmann::ordered_json params, double computed,
                       double reference, double tolerance);
/// computed <= reference + tolerance.
ReportRow upper_bound_row(std::string claim, std::string anchor, nlohmann::ordered_json params, double computed,
                          double reference, double tolerance);
/// computed >= reference - tolerance.
ReportRow lower_bound_row(std::string claim, std::string anchor, nlohmann::ordered_json params, double computed,
                          double reference, double tolerance);

struct RatioSample {
  std::string f;
  int n = 0;
  int r = 0;
  double alpha = 0.0;  ///< delta = alpha pi / n
  double E = 0.0;
  double omega = 0.0;
  double ratio_over_gamma = 0.0;
  bool degenerate = false;
};

struct VerificationReport {
  CampaignConfig config;
  std::vector<ReportRow> rows;
  std::vector<RatioSample> samples;

  /// Rows by claim_id then params, samples by (f, n, r, alpha).
  void sort();
  /// No fail or bound-violated rows.
  bool ok() const;
};

inline constexpr const char* kReportVersion = "1.0.0";

nlohmann::ordered_json to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);

enum class ReportFormat { Json, Csv };

/// Writes report.json or report.csv into `dir`, plus the three SVG plots when
/// requested. Returns the written paths.
std::vector<std::filesystem::path> emit_report(const VerificationReport& report, ReportFormat format, bool plots,
                                               const std::filesystem::path& dir);

}  // namespace stechkin::harness
