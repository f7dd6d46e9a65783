#include <gtest/gtest.h>

#include <fstream>
#include <functional>

#include "cotir/report.hpp"
#include "support.hpp"

using namespace cotir;
using nlohmann::json;
using report::Status;

namespace {

json golden_json() { return json::parse(report::dump(test::analyze_golden())); }

json& first_rec(json& j) {
  for (auto& f : j["findings"]) {
    if (!f["recommendations"].empty()) return f["recommendations"][0];
  }
  throw std::runtime_error("no recommendation");
}

void expect_rejected(const std::function<void(json&)>& mutate, const std::string& fragment) {
  auto j = golden_json();
  mutate(j);
  try {
    report::report_from_json(json::parse(j.dump()));
    FAIL() << "accepted a report with: " << fragment;
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Names, RoundTrip) {
  for (auto s : report::kAllSubtypes) EXPECT_EQ(report::parse_subtype(report::to_string(s)), s);
  for (auto c : {report::Category::A, report::Category::V, report::Category::IK, report::Category::O}) {
    EXPECT_EQ(report::parse_category(report::to_string(c)), c);
  }
  for (auto s : {Status::PROPOSED, Status::APPROVED, Status::REJECTED}) {
    EXPECT_EQ(report::parse_status(report::to_string(s)), s);
  }
  EXPECT_FALSE(report::parse_subtype("VAGUE").has_value());
}

TEST(Names, CategoryOfSubtype) {
  using report::Category;
  using report::Subtype;
  EXPECT_EQ(report::category_of(Subtype::LEXICAL_AMBIGUITY), Category::A);
  EXPECT_EQ(report::category_of(Subtype::STRUCTURAL_AMBIGUITY), Category::A);
  EXPECT_EQ(report::category_of(Subtype::VAGUE_PHRASE), Category::V);
  EXPECT_EQ(report::category_of(Subtype::VAGUE_VERB), Category::V);
  EXPECT_EQ(report::category_of(Subtype::WEAK_PHRASE), Category::V);
  EXPECT_EQ(report::category_of(Subtype::UNKNOWN_TERM), Category::IK);
  EXPECT_EQ(report::category_of(Subtype::MISSING_AGENT), Category::O);
  EXPECT_EQ(report::category_of(Subtype::DANGLING_REFERENCE), Category::O);
}

TEST(Json, GoldenRoundTrip) {
  const auto r = test::analyze_golden();
  const auto back = report::report_from_json(json::parse(report::dump(r)));
  EXPECT_EQ(back, r);
  EXPECT_EQ(report::dump(back), report::dump(r));
}

TEST(Json, ShippedSampleMatchesFreshAnalysis) {
  EXPECT_EQ(test::slurp(test::data_path("samples/emmon_fig3.report.json")), report::dump(test::analyze_golden()));
}

TEST(Json, RoundTripWithDecisions) {
  auto r = test::analyze_golden();
  auto& rec = r.findings.at(0).recommendations.at(0);
  rec.status = Status::REJECTED;
  rec.decided_by = "E2";
  rec.decided_at = "2024-01-01T00:00:00.000Z";
  rec.decisions = {{"E1", Status::APPROVED, 4, "ok", 1}, {"E2", Status::REJECTED, std::nullopt, std::nullopt, 2}};
  EXPECT_EQ(report::report_from_json(json::parse(report::dump(r))), r);
}

TEST(Json, FieldLayout) {
  const auto j = golden_json();
  EXPECT_EQ(j["schema"], "cotir.report/1");
  const auto& f = j["findings"][0];
  for (const char* k : {"id", "requirement_id", "category", "subtype", "span", "trigger", "lemma", "criticality",
                        "rationale", "recommendations"}) {
    EXPECT_TRUE(f.contains(k)) << k;
  }
  const auto& rec = f["recommendations"][0];
  for (const char* k : {"id", "finding_ref", "candidate_text", "evidence", "status", "decided_by", "decided_at"}) {
    EXPECT_TRUE(rec.contains(k)) << k;
  }
  EXPECT_TRUE(rec["decided_by"].is_null());
  EXPECT_EQ(rec["status"], "PROPOSED");
}

TEST(Json, Validation) {
  expect_rejected([](json& j) { j["schema"] = "cotir.report/0"; }, "unsupported schema");
  expect_rejected([](json& j) { j.erase("doc_id"); }, "missing field 'doc_id'");
  expect_rejected([](json& j) { j["findings"][0]["category"] = "IK"; }, "category does not match");
  expect_rejected([](json& j) { j["findings"][0]["span"] = json::array({0, 100000}); }, "span outside");
  expect_rejected([](json& j) { j["findings"][0]["trigger"] = "zzz"; }, "trigger does not match");
  expect_rejected([](json& j) { j["findings"][0]["criticality"] = 0; }, "criticality outside");
  expect_rejected([](json& j) { j["findings"][0]["requirement_id"] = "R99"; }, "unknown requirement");
  expect_rejected([](json& j) { first_rec(j)["finding_ref"]["requirement_id"] = "R99"; }, "finding_ref");
  expect_rejected([](json& j) { first_rec(j)["decided_by"] = "E1"; }, "PROPOSED");
  expect_rejected([](json& j) { first_rec(j)["status"] = "DONE"; }, "unknown status");
  expect_rejected([](json& j) { first_rec(j)["candidate_text"] = ""; }, "empty candidate_text");
  expect_rejected(
      [](json& j) {
        auto& rec = first_rec(j);
        rec["status"] = "APPROVED";
        rec["decided_by"] = "E1";
        rec["decisions"] = json::array({{{"expert_id", "E1"}, {"decision", "MAYBE"}, {"timestamp", 1}}});
      },
      "bad decision");
  expect_rejected([](json& j) { j["findings"][0]["span"] = "0-3"; }, "span");
}

TEST(Json, LoadReportFileErrors) {
  EXPECT_THROW(report::load_report_file("/nonexistent/report.json"), ConfigError);
  const auto dir = test::scratch_dir();
  {
    std::ofstream(dir + "/bad.json") << "{not json";
  }
  EXPECT_THROW(report::load_report_file(dir + "/bad.json"), Error);
}

TEST(Lookup, ById) {
  const auto r = test::analyze_golden();
  const auto& f = r.findings.back();
  EXPECT_EQ(r.finding(f.id), &f);
  EXPECT_EQ(r.recommendation(f.recommendations[0].id), &f.recommendations[0]);
  EXPECT_EQ(r.finding("F-none"), nullptr);
  EXPECT_EQ(r.requirement("R13")->ordinal, 13u);
}
