#include <algorithm>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "heinzlog/report_io.hpp"

namespace {

using namespace heinzlog;
namespace fs = std::filesystem;

class ReportFiles : public ::testing::Test {
 protected:
  fs::path dir;

  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir = fs::temp_directory_path() / (std::string("heinzlog_io_") + info->name());
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string path(const char* name) const { return (dir / name).string(); }
};

std::vector<InequalityReport> sample_reports() {
  TrialConfig c;
  c.theorem = Theorem::thm_2_8;
  c.trials = 3;
  c.dim = 3;
  c.s = 0.1;
  c.t = 0.35;
  c.seed = 0xfeedfacecafebeefULL;
  c.norms = {norm_kind::KyFan{2}, norm_kind::SchattenP{1.5}, norm_kind::Operator{}};
  return run_trials(c);
}

TEST_F(ReportFiles, EmptyListIsValidDocument) {
  write_report({}, ReportFormat::Json, path("e.json"));
  const auto doc = nlohmann::json::parse(detail::read_text(path("e.json")));
  EXPECT_TRUE(doc.at("reports").is_array());
  EXPECT_TRUE(doc.at("reports").empty());
  EXPECT_TRUE(read_report(path("e.json"), ReportFormat::Json).empty());

  write_report({}, ReportFormat::Csv, path("e.csv"));
  const std::string csv = detail::read_text(path("e.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1);
  EXPECT_TRUE(read_report(path("e.csv"), ReportFormat::Csv).empty());
}

TEST_F(ReportFiles, JsonRoundTrip) {
  const auto reports = sample_reports();
  write_report(reports, ReportFormat::Json, path("r.json"));
  EXPECT_EQ(read_report(path("r.json"), ReportFormat::Json), reports);
}

TEST_F(ReportFiles, CsvRoundTrip) {
  const auto reports = sample_reports();
  write_report(reports, ReportFormat::Csv, path("r.csv"));
  EXPECT_EQ(read_report(path("r.csv"), ReportFormat::Csv), reports);
}

TEST_F(ReportFiles, CsvRowCountAndHeader) {
  const auto reports = sample_reports();
  ASSERT_EQ(reports.size(), 9u);
  const std::string csv = reports_to_csv(reports);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "theorem,part,s,t,dim,seed,trial,norm,lhs,rhs,slack,relative_slack,holds,"
            "hypothesis_satisfied");
}

TEST(ReportJson, FieldOrderAndConfig) {
  TrialConfig c;
  c.theorem = Theorem::cor_2_10;
  c.t = 0.2;
  const auto text = reports_to_json(config_to_json(c), run_trials(c));
  const auto doc = nlohmann::ordered_json::parse(text);
  EXPECT_EQ(doc.begin().key(), "config");
  EXPECT_EQ(doc.at("config").at("theorem"), "cor_2_10");
  EXPECT_EQ(doc.at("config").at("norms").size(), default_norms(3).size());
  std::vector<std::string> keys;
  for (const auto& item : doc.at("reports").at(0).items()) keys.push_back(item.key());
  ASSERT_EQ(keys.size(), std::size(kReportColumns));
  for (std::size_t i = 0; i < keys.size(); ++i) EXPECT_EQ(keys[i], kReportColumns[i]);
}

TEST(ReportJson, SameConfigSameBytes) {
  TrialConfig c;
  c.theorem = Theorem::chain_1_2;
  c.trials = 4;
  c.seed = 12;
  EXPECT_EQ(reports_to_json(config_to_json(c), run_trials(c)),
            reports_to_json(config_to_json(c), run_trials(c)));
  c.seed = 13;
  TrialConfig d = c;
  d.seed = 12;
  EXPECT_NE(reports_to_json(config_to_json(c), run_trials(c)),
            reports_to_json(config_to_json(d), run_trials(d)));
}

TEST(ReportCsv, RejectsMalformedRows) {
  EXPECT_THROW(reports_from_csv(""), ConfigError);
  EXPECT_THROW(reports_from_csv("header\na,b,c\n"), ConfigError);
}

TEST(ReportFormat, Parse) {
  EXPECT_EQ(parse_format("json"), ReportFormat::Json);
  EXPECT_EQ(parse_format("csv"), ReportFormat::Csv);
  EXPECT_THROW(parse_format("xml"), ConfigError);
}

TEST(ReportIo, UnwritablePath) {
  EXPECT_THROW(write_report({}, ReportFormat::Json, "/nonexistent_dir/x/y.json"), ConfigError);
  EXPECT_THROW(read_report("/nonexistent_dir/x/y.json", ReportFormat::Json), ConfigError);
}

TEST(SweepIo, CsvQuotesGridAndJsonHasRows) {
  SweepReport rep{"heinz", "log", {}};
  SweepRow row;
  row.t = 0.25;
  row.grid = "uniform,12,40";
  row.min_eigenvalue = 1e-3;
  rep.rows.push_back(row);
  const std::string csv = sweep_to_csv(rep);
  EXPECT_NE(csv.find("\"uniform,12,40\""), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
  const auto doc = nlohmann::json::parse(sweep_to_json(rep));
  EXPECT_EQ(doc.at("rows").size(), 1u);
  EXPECT_EQ(doc.at("rows").at(0).at("grid"), "uniform,12,40");
  EXPECT_EQ(doc.at("num"), "heinz");
}

}  // namespace
