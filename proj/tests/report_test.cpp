#include <gtest/gtest.h>

#include <regex>

#include "dq/mutation.hpp"
#include "dq/report.hpp"
#include "dq/run_config.hpp"
#include "test_util.hpp"

namespace dq {
namespace {

CheckReport failing_report() {
  CheckOptions o;
  o.max_counterexamples = 3;
  return check_model(mutate(nqueens_program(), parse_mutation("unshift-head:2:4")), SpecId::S,
                     UniverseBounds::of(2, 2), o);
}

TEST(ReportJson, FieldNames) {
  RunConfig c;
  c.command = "check model";
  const nlohmann::ordered_json j = report_json(failing_report(), config_json(c));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"verdict", "verdict_label", "check", "subject", "bounds", "instances_checked",
                                            "instances_checked_saturated", "counterexample_total", "counterexamples",
                                            "components", "notes", "config", "wall_time_ms"}));
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["verdict_label"], "fail (bounded)");
  EXPECT_EQ(j["bounds"]["N"], 2);
  EXPECT_EQ(j["bounds"]["L"], 2);
  ASSERT_EQ(j["counterexamples"].size(), 3u);
  for (const auto& cex : j["counterexamples"]) {
    EXPECT_TRUE(cex.contains("clause_text"));
    EXPECT_TRUE(cex.contains("reason"));
    EXPECT_EQ(cex["component"], "clause 2");
  }
  EXPECT_FALSE(j["instances_checked_saturated"].get<bool>());
  EXPECT_EQ(j["config"]["command"], "check model");
}

TEST(ReportJson, DeterministicApartFromWallTime) {
  nlohmann::ordered_json x = report_json(failing_report()), y = report_json(failing_report());
  x.erase("wall_time_ms");
  y.erase("wall_time_ms");
  EXPECT_EQ(x.dump(), y.dump());
}

TEST(ReportJson, CounterexamplesUseDecimalNumerals) {
  const nlohmann::ordered_json j = report_json(failing_report());
  for (const auto& cex : j["counterexamples"]) {
    EXPECT_FALSE(std::regex_search(cex["clause_text"].get<std::string>(), std::regex(R"((^|[^a-z])s\()"))) << cex["clause_text"];
  }
}

TEST(ReportJson, SaturatedCountsAreFlagged) {
  CheckReport r;
  r.instances_checked = kCountMax;
  EXPECT_TRUE(report_json(r)["instances_checked_saturated"].get<bool>());
  EXPECT_NE(report_text(r).find("(saturated)"), std::string::npos);
}

TEST(ReportJson, WitnessBoundsOnlyWhenSet) {
  const CheckReport cov = check_covered(SpecId::S0, nqueens_program(), UniverseBounds::of(1, 1), UniverseBounds::of(1, 2));
  EXPECT_EQ(report_json(cov)["witness_bounds"]["L"], 2);
  EXPECT_FALSE(report_json(failing_report()).contains("witness_bounds"));
}

TEST(ReportText, Summary) {
  const std::string t = report_text(failing_report());
  EXPECT_EQ(t.rfind("model [S]: fail (bounded)", 0), 0u) << t;
  EXPECT_NE(t.find("clause 2: fail"), std::string::npos);
  EXPECT_NE(t.find("(3 of "), std::string::npos);
  CheckReport inc;
  inc.verdict = CheckVerdict::Inconclusive;
  EXPECT_EQ(verdict_label(inc.verdict), "inconclusive");
  EXPECT_EQ(verdict_label(CheckVerdict::Pass), "pass (bounded)");
}

TEST(PlacementsJson, Shape) {
  const auto j = placements_json(solve_queens(4).placements);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["n"], 4);
  EXPECT_EQ(j[0]["rows_by_column"], (std::vector<std::size_t>{2, 4, 1, 3}));
}

TEST(RunConfig, JsonRoundTrip) {
  RunConfig c;
  c.command = "check covered";
  c.bounds = UniverseBounds::of(2, 3);
  c.witness_bounds = UniverseBounds::of(2, 5);
  c.spec = "S0";
  c.mutation = "drop-clause:3";
  c.solve_limits.max_answers = 7;
  c.fail_fast = true;
  c.sort_overrides[2] = {{"Cs", Sort::AnyPoolTerm}};
  RunConfig back;
  apply_config_json(config_json(c), back);
  EXPECT_EQ(config_json(back).dump(), config_json(c).dump());
}

TEST(RunConfig, DefaultWitnessBoundsAddOneToL) {
  RunConfig c;
  c.bounds = UniverseBounds::of(3, 2);
  EXPECT_EQ(c.effective_witness_bounds().max_numeral, 3u);
  EXPECT_EQ(c.effective_witness_bounds().max_list_len, 3u);
}

TEST(RunConfig, StrictFields) {
  RunConfig c;
  EXPECT_THROW(apply_config_json(nlohmann::ordered_json::parse(R"({"bogus": 1})"), c), ConfigError);
  EXPECT_THROW(apply_config_json(nlohmann::ordered_json::parse(R"({"bounds": {"N": "x"}})"), c), ConfigError);
  EXPECT_THROW(apply_config_json(nlohmann::ordered_json::parse(R"({"bounds": {"Q": 1}})"), c), ConfigError);
  EXPECT_THROW(apply_config_json(nlohmann::ordered_json::parse(R"([1])"), c), ConfigError);
  EXPECT_THROW(apply_config_json(nlohmann::ordered_json::parse(R"j({"bounds": {"tail_pool": ["f(a)"]}})j"), c),
               ConfigError);
  apply_config_json(nlohmann::ordered_json::parse(R"({"bounds": {"N": 1, "L": 2}, "n": 5})"), c);
  EXPECT_EQ(c.bounds.max_numeral, 1u);
  EXPECT_EQ(c.bounds.max_list_len, 2u);
  EXPECT_EQ(c.n, 5u);
}

}  // namespace
}  // namespace dq
