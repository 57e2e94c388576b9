#include "stechkin/harness/report.hpp"

#include "stechkin/constants.hpp"
#include "stechkin/harness/svg.hpp"
#include "stechkin/trig.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace stechkin::harness {

namespace {

// Numbers compare numerically, everything else by its compact dump.
int compare_params(const nlohmann::ordered_json& a, const nlohmann::ordered_json& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia.key() != ib.key()) return ia.key() < ib.key() ? -1 : 1;
    const auto& va = ia.value();
    const auto& vb = ib.value();
    if (va.is_number() && vb.is_number()) {
      const double x = va.get<double>(), y = vb.get<double>();
      if (x != y) return x < y ? -1 : 1;
    } else {
      const std::string x = va.dump(), y = vb.dump();
      if (x != y) return x < y ? -1 : 1;
    }
  }
  if (ia == a.end() && ib == b.end()) return 0;
  return ia == a.end() ? -1 : 1;
}

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  return out + "\"";
}

std::string csv_number(double v) {
  if (!std::isfinite(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string ratio_plot(const VerificationReport& report) {
  std::map<double, std::map<int, double>> best;  // alpha -> r -> max ratio
  for (const auto& s : report.samples) {
    if (s.degenerate) continue;
    double& v = best[s.alpha][s.r];
    v = std::max(v, s.ratio_over_gamma);
  }
  std::vector<Series> series;
  for (const auto& [alpha, by_r] : best) {
    Series s;
    char name[48];
    std::snprintf(name, sizeof name, "delta = %g pi/n", alpha);
    s.name = name;
    s.markers = true;
    for (const auto& [r, v] : by_r) {
      s.x.push_back(r);
      s.y.push_back(v);
    }
    series.push_back(std::move(s));
  }
  return line_plot("max E / (gamma*_r omega_r) over the corpus", "r", "ratio / gamma*_r", series);
}

std::string mu_gap_plot() {
  Series gap{"1 - mu^2", {}, {}}, lo{"2/(3 sqrt(2k))", {}, {}}, hi{"5/(4 sqrt(2k))", {}, {}};
  for (int k = 1; k <= 200; ++k) {
    const double s = std::sqrt(2.0 * k);
    gap.x.push_back(k);
    gap.y.push_back(1.0 - mu_squared(k));
    lo.x.push_back(k);
    lo.y.push_back(2.0 / (3.0 * s));
    hi.x.push_back(k);
    hi.y.push_back(5.0 / (4.0 * s));
  }
  return line_plot("1 - mu_2k^2 and its Wallis envelope", "k", "value", {gap, lo, hi});
}

std::string ell_plot() {
  Series ell{"l(x)", {}, {}, true}, bound{"(4/pi^2) ln(x+1) + 1", {}, {}};
  for (int i = 0; i <= 24; ++i) {
    const double x = 0.5 + 1.5 * i;
    ell.x.push_back(x);
    ell.y.push_back(ell_function(x, 1e-6).value);
    bound.x.push_back(x);
    bound.y.push_back(4.0 / (kPi * kPi) * std::log(x + 1.0) + 1.0);
  }
  return line_plot("l(x) against the logarithmic bound", "x", "value", {ell, bound});
}

}  // namespace

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "fail";
    case RowStatus::BoundHolds: return "bound-holds";
    case RowStatus::BoundViolated: return "bound-violated";
    case RowStatus::Degenerate: return "degenerate";
    case RowStatus::Exploratory: return "exploratory";
  }
  return "unknown";
}

ReportRow equality_row(std::string claim, std::string anchor, nlohmann::ordered_json params, double computed,
                       double reference, double tolerance) {
  const bool ok = std::abs(computed - reference) <= tolerance;
  return {std::move(claim), std::move(anchor), std::move(params), computed, reference, tolerance,
          ok ? RowStatus::Pass : RowStatus::Fail};
}

ReportRow upper_bound_row(std::string claim, std::string anchor, nlohmann::ordered_json params, double computed,
                          double reference, double tolerance) {
  const bool ok = computed <= reference + tolerance;
  return {std::move(claim), std::move(anchor), std::move(params), computed, reference, tolerance,
          ok ? RowStatus::BoundHolds : RowStatus::BoundViolated};
}

ReportRow lower_bound_row(std::string claim, std::string anchor, nlohmann::ordered_json params, double computed,
                          double reference, double tolerance) {
  const bool ok = computed >= reference - tolerance;
  return {std::move(claim), std::move(anchor), std::move(params), computed, reference, tolerance,
          ok ? RowStatus::BoundHolds : RowStatus::BoundViolated};
}

void VerificationReport::sort() {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
    return compare_params(a.params, b.params) < 0;
  });
  std::stable_sort(samples.begin(), samples.end(), [](const RatioSample& a, const RatioSample& b) {
    return std::tie(a.f, a.n, a.r, a.alpha) < std::tie(b.f, b.n, b.r, b.alpha);
  });
}

bool VerificationReport::ok() const {
  return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) {
    return r.status == RowStatus::Fail || r.status == RowStatus::BoundViolated;
  });
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  auto& env = j["environment"];
  env["version"] = kReportVersion;
  env["campaign"] = to_string(report.config.campaign);
  env["seed"] = report.config.seed;
  env["grid_nodes"] = report.config.grid_nodes;
  env["refine_depth"] = report.config.refine_depth;
  env["h_nodes"] = report.config.h_nodes;
  env["config"] = config_to_json(report.config);

  j["rows"] = nlohmann::ordered_json::array();
  std::map<std::string, int> counts;
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["claim_id"] = r.claim_id;
    row["paper_anchor"] = r.paper_anchor;
    row["params"] = r.params;
    row["computed"] = number(r.computed);
    row["reference"] = number(r.reference);
    row["tolerance"] = number(r.tolerance);
    row["status"] = to_string(r.status);
    j["rows"].push_back(std::move(row));
    ++counts[to_string(r.status)];
  }

  j["ratio_samples"] = nlohmann::ordered_json::array();
  std::map<std::pair<double, int>, const RatioSample*> best;
  for (const auto& s : report.samples) {
    nlohmann::ordered_json row;
    row["f"] = s.f;
    row["n"] = s.n;
    row["r"] = s.r;
    row["alpha"] = s.alpha;
    row["E"] = number(s.E);
    row["omega"] = number(s.omega);
    row["ratio_over_gamma"] = number(s.ratio_over_gamma);
    row["status"] = s.degenerate ? "degenerate" : "ok";
    j["ratio_samples"].push_back(std::move(row));
    if (s.degenerate) continue;
    const RatioSample*& b = best[{s.alpha, s.r}];
    if (!b || s.ratio_over_gamma > b->ratio_over_gamma) b = &s;
  }

  auto& summary = j["summary"];
  summary["rows"] = report.rows.size();
  summary["status_counts"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : counts) summary["status_counts"][k] = v;
  summary["max_ratio_over_gamma"] = nlohmann::ordered_json::array();
  for (const auto& [key, s] : best) {
    nlohmann::ordered_json m;
    m["alpha"] = key.first;
    m["r"] = key.second;
    m["value"] = number(s->ratio_over_gamma);
    m["f"] = s->f;
    m["n"] = s->n;
    summary["max_ratio_over_gamma"].push_back(std::move(m));
  }
  summary["ok"] = report.ok();
  return j;
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "claim_id,paper_anchor,params,computed,reference,tolerance,status\r\n";
  for (const auto& r : report.rows) {
    os << csv_field(r.claim_id) << ',' << csv_field(r.paper_anchor) << ',' << csv_field(r.params.dump()) << ','
       << csv_number(r.computed) << ',' << csv_number(r.reference) << ',' << csv_number(r.tolerance) << ','
       << to_string(r.status) << "\r\n";
  }
  return os.str();
}

std::vector<std::filesystem::path> emit_report(const VerificationReport& report, ReportFormat format, bool plots,
                                               const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory '" + dir.string() + "': " + ec.message());
  std::vector<std::filesystem::path> written;
  if (format == ReportFormat::Json) {
    written.push_back(dir / "report.json");
    write_file(written.back(), to_json(report).dump(2) + "\n");
  } else {
    written.push_back(dir / "report.csv");
    write_file(written.back(), to_csv(report));
  }
  if (plots) {
    written.push_back(dir / "ratio_vs_r.svg");
    write_file(written.back(), ratio_plot(report));
    written.push_back(dir / "mu_gap_vs_k.svg");
    write_file(written.back(), mu_gap_plot());
    written.push_back(dir / "ell_vs_logbound.svg");
    write_file(written.back(), ell_plot());
  }
  return written;
}

}  // namespace stechkin::harness
