#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cotir/report.hpp"
#include "support.hpp"

using namespace cotir;
using test::run_cli;

namespace {

const std::string kCorpus = test::data_path("corpus/emmon_fig3.txt");

std::string write(const std::string& dir, const std::string& name, const std::string& text) {
  const auto path = dir + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("analyze").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
}

TEST(Cli, AnalyzeJsonMatchesLibrary) {
  const auto r = run_cli("analyze " + kCorpus + " --format json");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_EQ(r.out, report::dump(test::analyze_golden()));
}

TEST(Cli, AnalyzeIsByteIdenticalAcrossRuns) {
  const auto a = run_cli("analyze " + kCorpus + " --format text");
  const auto b = run_cli("analyze " + kCorpus + " --format text");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("Implicit Requirement Report: emmon-fig3", 0), 0u);
}

TEST(Cli, AnalyzeWritesOutFile) {
  const auto dir = test::scratch_dir();
  const auto r = run_cli("analyze " + kCorpus + " --format html --out " + dir + "/r.html");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_EQ(test::slurp(dir + "/r.html").rfind("<!DOCTYPE html>", 0), 0u);
}

TEST(Cli, EmptyDocumentGivesNoFindings) {
  const auto dir = test::scratch_dir();
  const auto doc = write(dir, "empty.txt", "");
  const auto r = run_cli("analyze " + doc + " --input-format lines");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const auto rep = report::report_from_json(nlohmann::json::parse(r.out));
  EXPECT_TRUE(rep.findings.empty());
  EXPECT_EQ(rep.doc_id, "empty");
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run_cli("analyze /nonexistent/doc.txt").exit_code, 2);
  EXPECT_EQ(run_cli("analyze " + kCorpus + " --ontology /nonexistent.onto").exit_code, 2);
  const auto dir = test::scratch_dir();
  const auto bad = write(dir, "dup.txt", "R1: a\nR1: b\n");
  const auto r = run_cli("analyze " + bad);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find(":2:"), std::string::npos) << r.out;
}

TEST(Cli, ConfigFromEnvironmentAndFlags) {
  const auto dir = test::scratch_dir();
  const auto conf = write(dir, "c.conf", "max_recommendations = 1\n");
  const auto r = run_cli("analyze " + kCorpus, "COTIR_CONFIG=" + conf);
  ASSERT_EQ(r.exit_code, 0) << r.out;
  for (const auto& f : report::report_from_json(nlohmann::json::parse(r.out)).findings) {
    EXPECT_EQ(f.recommendations.size(), 1u);
  }
  const auto flag = run_cli("analyze " + kCorpus + " --max-recommendations 2", "COTIR_CONFIG=" + conf);
  ASSERT_EQ(flag.exit_code, 0);
  bool two = false;
  for (const auto& f : report::report_from_json(nlohmann::json::parse(flag.out)).findings) {
    two = two || f.recommendations.size() == 2;
  }
  EXPECT_TRUE(two);
  EXPECT_EQ(run_cli("analyze " + kCorpus, "COTIR_CONFIG=/nonexistent.conf").exit_code, 2);
  const auto bad = write(dir, "bad.conf", "threshold = 9\n");
  EXPECT_NE(run_cli("analyze " + kCorpus + " --config " + bad).exit_code, 0);
}

TEST(Cli, EvaluateSample) {
  const auto dir = test::scratch_dir();
  const auto report = test::data_path("samples/emmon_fig3.report.json");
  const auto r = run_cli("evaluate --report " + report + " --doc " + kCorpus + " --annotations " +
                         test::data_path("samples/annotations_E1.csv") + " " +
                         test::data_path("samples/annotations_E2.csv") + " --threshold 5 --out " + dir + "/m");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const auto csv = test::slurp(dir + "/m.csv");
  EXPECT_EQ(csv.rfind("metric,doc,E1,E2,average\n", 0), 0u);
  const auto j = nlohmann::json::parse(test::slurp(dir + "/m.json"));
  EXPECT_EQ(j["experts"], nlohmann::json({"E1", "E2"}));
}

TEST(Cli, EvaluateDocumentMismatch) {
  const auto dir = test::scratch_dir();
  const auto ann = write(dir, "a.csv", "E1,other-doc,R1,A\n");
  const auto r = run_cli("evaluate --report " + test::data_path("samples/emmon_fig3.report.json") + " --doc " +
                         kCorpus + " --annotations " + ann);
  EXPECT_EQ(r.exit_code, 2) << r.out;
}

TEST(Cli, Table2Passes) {
  const auto r = run_cli("table2 " + test::data_path("table2/table2.tsv"));
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, KnowledgeValidation) {
  EXPECT_EQ(run_cli("kb validate " + test::data_path("ontology/emmon.onto")).exit_code, 0);
  EXPECT_EQ(run_cli("kb validate " + test::data_path("cskb/desk.tsv")).exit_code, 0);
  EXPECT_EQ(run_cli("kb validate " + test::data_path("lexicons")).exit_code, 0);
  const auto dir = test::scratch_dir();
  const auto cyc = write(dir, "cyc.onto",
                         "concept a \"a\"\nconcept b \"b\"\naxiom subsumes a b\naxiom subsumes b a\n");
  const auto r = run_cli("kb validate " + cyc);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("invalid"), std::string::npos);
  EXPECT_TRUE(r.out.find("a -> b -> a") != std::string::npos || r.out.find("b -> a -> b") != std::string::npos)
      << r.out;
  const auto dangling = write(dir, "d.onto", "concept a \"a\"\nrel part-of a ghost\n");
  EXPECT_EQ(run_cli("kb validate " + dangling).exit_code, 1);
  EXPECT_EQ(run_cli("kb validate " + dir + "/missing.onto").exit_code, 2);
  const auto stats = run_cli("kb stats " + test::data_path("cskb/desk.tsv"));
  EXPECT_EQ(stats.exit_code, 0);
  EXPECT_NE(stats.out.find("triples"), std::string::npos) << stats.out;
}

TEST(Cli, FeedbackWritesOverlays) {
  const auto dir = test::scratch_dir();
  const auto rep = report::load_report_file(test::data_path("samples/emmon_fig3.report.json"));
  std::string rec;
  for (const auto& f : rep.findings) {
    if (f.subtype == report::Subtype::UNKNOWN_TERM && f.lemma == "endangerment") rec = f.recommendations[0].id;
  }
  ASSERT_FALSE(rec.empty());
  write(dir, "log.jsonl",
        R"({"recommendation_id":")" + rec +
            R"(","expert_id":"E1","decision":"APPROVE","timestamp":1,"recorded_at":"2024-01-01T00:00:00.000Z"})" "\n");
  const auto r = run_cli("feedback --report " + test::data_path("samples/emmon_fig3.report.json") + " --log " + dir +
                         "/log.jsonl --out-dir " + dir + "/fb");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(test::slurp(dir + "/fb/ontology_overlay.onto").find("endangerment"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir + "/fb/suppressions.tsv"));

  const auto conf = write(dir, "fb.conf", "ontology_overlay = fb/ontology_overlay.onto\nsuppressions = fb/suppressions.tsv\n");
  const auto again = run_cli("analyze " + kCorpus + " --config " + conf);
  ASSERT_EQ(again.exit_code, 0) << again.out;
  for (const auto& f : report::report_from_json(nlohmann::json::parse(again.out)).findings) {
    EXPECT_FALSE(f.subtype == report::Subtype::UNKNOWN_TERM && f.lemma == "endangerment");
  }
}
