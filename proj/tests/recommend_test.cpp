#include <gtest/gtest.h>

#include <random>

#include "cotir/recommend.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cotir;
using report::Subtype;

namespace {

struct Case {
  corpus::Requirement req;
  nlp::AnalyzedText text;
  std::vector<report::Finding> findings;
};

Case analyze(const std::string& text, const detector::Knowledge& k = test::shipped_knowledge()) {
  const detector::Analyzer a(k);
  Case c{{"R1", text, 1, 1}, a.process(text), {}};
  c.findings = a.detect(c.req, "doc", c.text);
  return c;
}

const report::Finding& only(const Case& c, Subtype s, const std::string& trigger) {
  for (const auto& f : c.findings) {
    if (f.subtype == s && f.trigger == trigger) return f;
  }
  throw std::runtime_error("no finding '" + trigger + "'");
}

bool evidence_in_kb(const report::Evidence& e, const detector::Knowledge& k) {
  if (const auto* t = std::get_if<knowledge::CskTriple>(&e)) return k.cskb.contains(*t);
  return k.ontology.relations().count(std::get<knowledge::Relation>(e)) > 0;
}

}  // namespace

TEST(ObjectHead, FindsFirstNounPhraseAfterVerb) {
  const auto c = analyze("The C&C shall support the configuration of ranges for sensor readings.");
  const auto& f = only(c, Subtype::VAGUE_VERB, "support");
  EXPECT_EQ(recommend::object_head(c.text, f.span), "configuration");
}

TEST(ObjectHead, EmptyWithoutObject) {
  const auto c = analyze("Requests are normally handled.");
  const auto& f = only(c, Subtype::VAGUE_VERB, "handled");
  EXPECT_EQ(recommend::object_head(c.text, f.span), "");
}

TEST(Recommend, VagueVerbUsesCommonSenseProperties) {
  const auto& k = test::shipped_knowledge();
  const auto c = analyze("The C&C shall support the configuration of ranges.");
  const auto& f = only(c, Subtype::VAGUE_VERB, "support");
  const auto recs = recommend::recommend(f, c.req, c.text, k, 3);
  const auto expected = k.cskb.query("configuration", "hasProperty");
  ASSERT_FALSE(expected.empty());
  ASSERT_EQ(recs.size(), std::min<std::size_t>(3, expected.size()));
  for (std::size_t i = 0; i < recs.size(); ++i) {
    ASSERT_EQ(recs[i].evidence.size(), 1u);
    EXPECT_EQ(std::get<knowledge::CskTriple>(recs[i].evidence[0]), expected[i]);
    EXPECT_NE(recs[i].candidate_text.find(expected[i].object), std::string::npos);
    EXPECT_EQ(recs[i].status, report::Status::PROPOSED);
    EXPECT_EQ(recs[i].finding_ref.span, f.span);
  }
}

TEST(Recommend, VagueVerbWithoutObjectAsksForObject) {
  const auto c = analyze("Requests are normally handled.");
  const auto recs =
      recommend::recommend(only(c, Subtype::VAGUE_VERB, "handled"), c.req, c.text, test::shipped_knowledge());
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_TRUE(recs[0].evidence.empty());
  EXPECT_NE(recs[0].candidate_text.find("handle"), std::string::npos);
}

TEST(Recommend, AmbiguityGlossesCappedByMax) {
  const auto& k = test::shipped_knowledge();
  const auto* entry = k.lex.ambiguity.find("provide");
  ASSERT_NE(entry, nullptr);
  const auto c = analyze("The C&C shall provide the users with data.");
  const auto& f = only(c, Subtype::LEXICAL_AMBIGUITY, "provide");
  const auto many = recommend::recommend(f, c.req, c.text, k, 100);
  EXPECT_EQ(many.size(), entry->glosses.size());
  for (std::size_t i = 0; i < many.size(); ++i) {
    EXPECT_NE(many[i].candidate_text.find(entry->glosses[i]), std::string::npos);
  }
  EXPECT_EQ(recommend::recommend(f, c.req, c.text, k, 1).size(), 1u);
}

TEST(Recommend, UnknownTermOffersDefinitionFirst) {
  const auto& k = test::shipped_knowledge();
  const auto c = analyze("The system shall display endangerment level.");
  const auto& f = only(c, Subtype::UNKNOWN_TERM, "endangerment");
  const auto recs = recommend::recommend(f, c.req, c.text, k, 3);
  ASSERT_GE(recs.size(), 1u);
  EXPECT_NE(recs[0].candidate_text.find("'endangerment'"), std::string::npos);
  EXPECT_TRUE(recs[0].evidence.empty());
  for (std::size_t i = 1; i < recs.size(); ++i) {
    ASSERT_EQ(recs[i].evidence.size(), 1u);
    EXPECT_EQ(std::get<knowledge::CskTriple>(recs[i].evidence[0]).subject, "endangerment");
  }
}

TEST(Recommend, TemplatesForOtherSubtypes) {
  const auto& k = test::shipped_knowledge();
  const std::vector<std::pair<std::string, Subtype>> cases = {
      {"The system shall respond to a great extent.", Subtype::VAGUE_PHRASE},
      {"Readings shall be validated.", Subtype::MISSING_AGENT},
      {"It shall be fast.", Subtype::DANGLING_REFERENCE},
      {"The system shall log errors and warnings or alerts.", Subtype::STRUCTURAL_AMBIGUITY},
  };
  for (const auto& [text, subtype] : cases) {
    const auto c = analyze(text);
    bool seen = false;
    for (const auto& f : c.findings) {
      if (f.subtype != subtype) continue;
      seen = true;
      const auto recs = recommend::recommend(f, c.req, c.text, k, 3);
      ASSERT_EQ(recs.size(), 1u) << text;
      EXPECT_NE(recs[0].candidate_text.find(f.trigger), std::string::npos) << text;
    }
    EXPECT_TRUE(seen) << text;
  }
}

TEST(Recommend, IntegrityOnRandomRequirements) {
  const auto& k = test::shipped_knowledge();
  std::mt19937_64 rng(55);
  for (int i = 0; i < 300; ++i) {
    const int max = 1 + static_cast<int>(rng() % 4);
    const auto c = analyze(test::oracle::random_requirement(rng));
    for (const auto& f : c.findings) {
      const auto recs = recommend::recommend(f, c.req, c.text, k, max);
      ASSERT_GE(recs.size(), 1u);
      ASSERT_LE(recs.size(), static_cast<std::size_t>(max));
      for (const auto& r : recs) {
        EXPECT_FALSE(r.candidate_text.empty());
        for (const auto& e : r.evidence) EXPECT_TRUE(evidence_in_kb(e, k)) << r.candidate_text;
      }
      EXPECT_EQ(recs, recommend::recommend(f, c.req, c.text, k, max));
    }
  }
}
