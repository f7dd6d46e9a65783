#include <gtest/gtest.h>

#include <random>

#include "cotir/render.hpp"
#include "support.hpp"

using namespace cotir;
using nlp::Span;

namespace {

// Drops unescaped '*' markers and unescapes "\*".
std::string unmark(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == '*') {
      out.push_back('*');
      ++i;
    } else if (s[i] != '*') {
      out.push_back(s[i]);
    }
  }
  return out;
}

}  // namespace

TEST(MarkText, Examples) {
  EXPECT_EQ(render::mark_text("The C&C shall provide data.", {{14, 21}}), "The C&C shall *provide* data.");
  EXPECT_EQ(render::mark_text("abc", {}), "abc");
  EXPECT_EQ(render::mark_text("", {}), "");
}

TEST(MarkText, AdjacentSpansMerge) {
  EXPECT_EQ(render::mark_text("a particular type of x", {{2, 12}, {13, 17}}), "a *particular type* of x");
  EXPECT_EQ(render::mark_text("ab cd ef", {{0, 2}, {1, 5}}), "*ab cd* ef");
  EXPECT_EQ(render::mark_text("ab, cd", {{0, 2}, {4, 6}}), "*ab*, *cd*");
}

TEST(MarkText, EscapesLiteralStars) { EXPECT_EQ(render::mark_text("a*b c", {{4, 5}}), "a\\*b *c*"); }

TEST(MarkText, UnmarkRecoversTextOnRandomInput) {
  std::mt19937_64 rng(9);
  const std::string alphabet = "ab *,.";
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    for (auto n = rng() % 20; n > 0; --n) text.push_back(alphabet[rng() % alphabet.size()]);
    std::vector<Span> spans;
    for (auto n = rng() % 4; n > 0 && !text.empty(); --n) {
      const auto a = rng() % text.size();
      spans.push_back({a, a + 1 + rng() % (text.size() - a)});
    }
    EXPECT_EQ(unmark(render::mark_text(text, spans)), text) << text;
  }
}

TEST(MarkedLines, OneLinePerRequirement) {
  const auto r = test::analyze_golden();
  const auto lines = render::marked_lines(r);
  ASSERT_EQ(lines.size(), r.requirements.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    EXPECT_EQ(unmark(lines[i]), r.requirements[i].id + ": " + r.requirements[i].text);
  }
}

TEST(TextReport, ListsEveryFindingAndRecommendation) {
  const auto r = test::analyze_golden();
  const auto text = render::text_report(r);
  EXPECT_EQ(text.rfind("Implicit Requirement Report: emmon-fig3\n", 0), 0u);
  EXPECT_NE(text.find(r.config_digest), std::string::npos);
  for (const auto& f : r.findings) {
    EXPECT_NE(text.find("  " + f.id + " "), std::string::npos) << f.id;
    for (const auto& rec : f.recommendations) EXPECT_NE(text.find("    " + rec.id + " "), std::string::npos);
  }
  EXPECT_EQ(text, render::text_report(test::analyze_golden()));
}

TEST(HtmlReport, MarksAndEscapes) {
  const auto r = test::analyze_golden();
  const auto html = render::html_report(r);
  EXPECT_EQ(html.rfind("<!DOCTYPE html>", 0), 0u);
  EXPECT_NE(html.find("C&amp;C"), std::string::npos);
  EXPECT_EQ(html.find("C&C"), std::string::npos);
  EXPECT_NE(html.find("<mark class=\"cat-A\""), std::string::npos);
  EXPECT_NE(html.find("cat-IK"), std::string::npos);
  std::size_t marks = 0;
  for (auto p = html.find("<mark "); p != std::string::npos; p = html.find("<mark ", p + 1)) ++marks;
  std::size_t closes = 0;
  for (auto p = html.find("</mark>"); p != std::string::npos; p = html.find("</mark>", p + 1)) ++closes;
  EXPECT_EQ(marks, closes);
  EXPECT_GE(marks, r.findings.size() / 2);
  for (const auto& q : r.requirements) EXPECT_NE(html.find("id=\"" + q.id + "\""), std::string::npos);
}
