#ifndef HEINZLOG_REPORT_IO_HPP
#define HEINZLOG_REPORT_IO_HPP

// JSON and CSV serialization of inequality and sweep reports.
//
// JSON:  {"config": {...}, "reports": [{<InequalityReport fields>}, ...]}
// CSV:   one header row, then one row per report; columns follow the field
//        order of InequalityReport. Field order is fixed in both formats.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "heinzlog/errors.hpp"
#include "heinzlog/report.hpp"
#include "heinzlog/verify.hpp"

namespace heinzlog {

enum class ReportFormat { Json, Csv };

inline ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw ConfigError("unknown report format '" + name + "'");
}

inline constexpr const char* kReportColumns[] = {
    "theorem", "part", "s",     "t",     "dim",            "seed",  "trial",
    "norm",    "lhs",  "rhs",   "slack", "relative_slack", "holds", "hypothesis_satisfied",
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const InequalityReport& r) {
  ojson j;
  j["theorem"] = r.theorem;
  j["part"] = r.part;
  j["s"] = r.s;
  j["t"] = r.t;
  j["dim"] = r.dim;
  j["seed"] = r.seed;
  j["trial"] = r.trial;
  j["norm"] = r.norm;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["slack"] = r.slack;
  j["relative_slack"] = r.relative_slack;
  j["holds"] = r.holds;
  j["hypothesis_satisfied"] = r.hypothesis_satisfied;
  return j;
}

inline InequalityReport report_from_json(const ojson& j) {
  InequalityReport r;
  r.theorem = j.at("theorem").get<std::string>();
  r.part = j.at("part").get<int>();
  r.s = j.at("s").get<double>();
  r.t = j.at("t").get<double>();
  r.dim = j.at("dim").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.trial = j.at("trial").get<std::int64_t>();
  r.norm = j.at("norm").get<std::string>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.slack = j.at("slack").get<double>();
  r.relative_slack = j.at("relative_slack").get<double>();
  r.holds = j.at("holds").get<bool>();
  r.hypothesis_satisfied = j.at("hypothesis_satisfied").get<bool>();
  return r;
}

// Round-trip exact decimal form.
inline std::string csv_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open '" + path + "' for writing");
  os << text;
  if (!os) throw ConfigError("failed writing '" + path + "'");
}

inline std::string read_text(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace detail

inline nlohmann::ordered_json config_to_json(const TrialConfig& c) {
  nlohmann::ordered_json j;
  j["theorem"] = to_string(c.theorem);
  j["seed"] = c.seed;
  j["dim"] = c.dim;
  j["trials"] = c.trials;
  j["s"] = c.s;
  j["t"] = c.t;
  auto norms = nlohmann::ordered_json::array();
  for (const NormKind& nk : effective_norms(c)) norms.push_back(to_string(nk));
  j["norms"] = std::move(norms);
  j["explore"] = c.explore;
  return j;
}

inline std::string reports_to_json(const nlohmann::ordered_json& config,
                                   const std::vector<InequalityReport>& reports) {
  nlohmann::ordered_json doc;
  doc["config"] = config;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(detail::to_json(r));
  doc["reports"] = std::move(arr);
  return doc.dump(2) + "\n";
}

inline std::string reports_to_csv(const std::vector<InequalityReport>& reports) {
  std::string out;
  for (std::size_t i = 0; i < std::size(kReportColumns); ++i) {
    if (i) out += ',';
    out += kReportColumns[i];
  }
  out += '\n';
  for (const auto& r : reports) {
    out += r.theorem + ',' + std::to_string(r.part) + ',' + detail::csv_double(r.s) + ',' +
           detail::csv_double(r.t) + ',' + std::to_string(r.dim) + ',' + std::to_string(r.seed) +
           ',' + std::to_string(r.trial) + ',' + r.norm + ',' + detail::csv_double(r.lhs) + ',' +
           detail::csv_double(r.rhs) + ',' + detail::csv_double(r.slack) + ',' +
           detail::csv_double(r.relative_slack) + ',' + (r.holds ? "true" : "false") + ',' +
           (r.hypothesis_satisfied ? "true" : "false") + '\n';
  }
  return out;
}

/// Writes reports to `path` in the given format.
inline void write_report(const std::vector<InequalityReport>& reports, ReportFormat format,
                         const std::string& path,
                         const nlohmann::ordered_json& config = nlohmann::ordered_json::object()) {
  detail::write_text(path, format == ReportFormat::Json ? reports_to_json(config, reports)
                                                        : reports_to_csv(reports));
}

inline std::vector<InequalityReport> reports_from_json(const std::string& text) {
  const auto doc = nlohmann::ordered_json::parse(text);
  std::vector<InequalityReport> out;
  for (const auto& j : doc.at("reports")) out.push_back(detail::report_from_json(j));
  return out;
}

inline std::vector<InequalityReport> reports_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("CSV report has no header");
  std::vector<InequalityReport> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c = detail::split_csv_line(line);
    if (c.size() != std::size(kReportColumns))
      throw ConfigError("CSV row has " + std::to_string(c.size()) + " columns");
    InequalityReport r;
    r.theorem = c[0];
    r.part = std::stoi(c[1]);
    r.s = std::stod(c[2]);
    r.t = std::stod(c[3]);
    r.dim = std::stoi(c[4]);
    r.seed = std::stoull(c[5]);
    r.trial = std::stoll(c[6]);
    r.norm = c[7];
    r.lhs = std::stod(c[8]);
    r.rhs = std::stod(c[9]);
    r.slack = std::stod(c[10]);
    r.relative_slack = std::stod(c[11]);
    r.holds = c[12] == "true";
    r.hypothesis_satisfied = c[13] == "true";
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<InequalityReport> read_report(const std::string& path, ReportFormat format) {
  const std::string text = detail::read_text(path);
  return format == ReportFormat::Json ? reports_from_json(text) : reports_from_csv(text);
}

// ---------------------------------------------------------------------------
// Sweep reports

inline constexpr const char* kSweepColumns[] = {
    "t",         "s",         "grid",          "min_eigenvalue", "tolerance",
    "is_psd",    "witness_min_eigenvalue",     "witness_found",  "dominates",
};

inline std::string sweep_to_json(const SweepReport& rep) {
  nlohmann::ordered_json doc;
  doc["num"] = rep.num_family;
  doc["den"] = rep.den_family;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : rep.rows) {
    nlohmann::ordered_json j;
    j["t"] = r.t;
    j["s"] = r.s;
    j["grid"] = r.grid;
    j["min_eigenvalue"] = r.min_eigenvalue;
    j["tolerance"] = r.tolerance;
    j["is_psd"] = r.is_psd;
    j["witness_min_eigenvalue"] = r.witness_min_eigenvalue;
    j["witness_found"] = r.witness_found;
    j["dominates"] = r.dominates;
    rows.push_back(std::move(j));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

inline std::string sweep_to_csv(const SweepReport& rep) {
  std::string out;
  for (std::size_t i = 0; i < std::size(kSweepColumns); ++i) {
    if (i) out += ',';
    out += kSweepColumns[i];
  }
  out += '\n';
  for (const auto& r : rep.rows) {
    // The grid description contains commas; quote it.
    out += detail::csv_double(r.t) + ',' + detail::csv_double(r.s) + ",\"" + r.grid + "\"," +
           detail::csv_double(r.min_eigenvalue) + ',' + detail::csv_double(r.tolerance) + ',' +
           (r.is_psd ? "true" : "false") + ',' + detail::csv_double(r.witness_min_eigenvalue) +
           ',' + (r.witness_found ? "true" : "false") + ',' + (r.dominates ? "true" : "false") +
           '\n';
  }
  return out;
}

inline void write_sweep(const SweepReport& rep, ReportFormat format, const std::string& path) {
  detail::write_text(path, format == ReportFormat::Json ? sweep_to_json(rep) : sweep_to_csv(rep));
}

}  // namespace heinzlog

#endif  // HEINZLOG_REPORT_IO_HPP
