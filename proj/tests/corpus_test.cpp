#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cotir/corpus.hpp"
#include "cotir/error.hpp"
#include "support.hpp"

using namespace cotir;
using corpus::Format;

namespace {

corpus::RequirementDoc parse(const std::string& text, Format f = Format::lines) {
  std::istringstream in(text);
  return corpus::load_requirements(in, f, "doc");
}

}  // namespace

TEST(Normalize, CollapsesWhitespace) { EXPECT_EQ(corpus::normalize("a\t b\n"), "a b"); }

TEST(Normalize, Empty) { EXPECT_EQ(corpus::normalize(""), ""); }

TEST(Normalize, MapsCurlyQuotes) {
  EXPECT_EQ(corpus::normalize("\xE2\x80\x9CSuspicious\xE2\x80\x9D"), "\"Suspicious\"");
  EXPECT_EQ(corpus::normalize("user\xE2\x80\x99s"), "user's");
}

TEST(Normalize, DropsControlCharacters) { EXPECT_EQ(corpus::normalize("a\x01" "b\x7f c"), "ab c"); }

TEST(Normalize, IdempotentOnRandomStrings) {
  std::mt19937_64 rng(7);
  const std::vector<std::string> pieces = {"a",  "Z",  " ",  "\t", "\n", "\r", "\x01", "\"",
                                           "\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\x98", "\xC3\xA9",
                                           "  ", ".",  "\x7f", "\xE2\x80\x99"};
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    const auto n = rng() % 20;
    for (std::size_t k = 0; k < n; ++k) s += pieces[rng() % pieces.size()];
    const auto once = corpus::normalize(s);
    EXPECT_EQ(corpus::normalize(once), once) << s;
    EXPECT_EQ(once.find("  "), std::string::npos);
    for (unsigned char c : once) EXPECT_FALSE(c < 0x20 || c == 0x7f);
  }
}

TEST(LoadRequirements, SingleLine) {
  const auto doc = parse("The C&C shall keep a history of collected sensor readings of up to 1 year.\n");
  ASSERT_EQ(doc.requirements.size(), 1u);
  EXPECT_EQ(doc.requirements[0].id, "R1");
  EXPECT_EQ(doc.requirements[0].ordinal, 1u);
}

TEST(LoadRequirements, EmptyStream) {
  EXPECT_TRUE(parse("").requirements.empty());
  EXPECT_TRUE(parse("", Format::numbered).requirements.empty());
}

TEST(LoadRequirements, GoldenCorpusHasThirteen) {
  const auto doc = test::load_doc(test::data_path("corpus/emmon_fig3.txt"));
  // count the ID-bearing lines of the file independently
  std::istringstream in(test::slurp(test::data_path("corpus/emmon_fig3.txt")));
  std::string line;
  std::size_t expected = 0;
  while (std::getline(in, line)) expected += line.rfind("R", 0) == 0;
  ASSERT_EQ(doc.requirements.size(), expected);
  EXPECT_EQ(expected, 13u);
  for (std::size_t i = 0; i < doc.requirements.size(); ++i) {
    EXPECT_EQ(doc.requirements[i].ordinal, i + 1);
    EXPECT_EQ(doc.requirements[i].id, "R" + std::to_string(i + 1));
  }
  EXPECT_EQ(doc.doc_id, "emmon-fig3");
  EXPECT_FALSE(doc.title.empty());
}

TEST(LoadRequirements, NumberedContinuationLines) {
  const auto doc = parse("R1.2: The system shall\n  log every error.\nR1.3: It shall be fast.\n", Format::numbered);
  ASSERT_EQ(doc.requirements.size(), 2u);
  EXPECT_EQ(doc.requirements[0].id, "R1.2");
  EXPECT_EQ(doc.requirements[0].text, "The system shall log every error.");
  EXPECT_EQ(doc.requirements[1].ordinal, 2u);
  EXPECT_EQ(doc.requirements[1].source_line, 3u);
}

TEST(LoadRequirements, DuplicateIdNamesLine) {
  try {
    parse("R1: a\nR2: b\nR1: c\n", Format::numbered);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(LoadRequirements, TextBeforeFirstIdRejected) {
  EXPECT_THROW(parse("free text\nR1: a\n", Format::numbered), ParseError);
}

TEST(LoadRequirements, InvalidUtf8Rejected) { EXPECT_THROW(parse("bad \xC3\x28 byte\n"), ParseError); }

TEST(LoadRequirements, DirectivesAndComments) {
  const auto doc = parse("# doc: abc\n# title: A title\n# plain comment\nfirst\n\nsecond\n");
  EXPECT_EQ(doc.doc_id, "abc");
  EXPECT_EQ(doc.title, "A title");
  ASSERT_EQ(doc.requirements.size(), 2u);
  EXPECT_EQ(doc.requirements[1].id, "R2");
}

TEST(LoadRequirements, UnknownFormatName) { EXPECT_THROW(corpus::parse_format("xml"), ConfigError); }

TEST(LoadRequirements, Deterministic) {
  const auto text = test::slurp(test::data_path("corpus/emmon_fig3.txt"));
  EXPECT_EQ(parse(text, Format::numbered), parse(text, Format::numbered));
}

TEST(LoadRequirements, NumberedRoundTripOnRandomDocs) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> words = {"The", "system", "shall", "log", "R2:", "data", "\"x\"", "#", "1.5", "and"};
  for (int iter = 0; iter < 300; ++iter) {
    corpus::RequirementDoc doc;
    doc.doc_id = "d" + std::to_string(iter);
    doc.title = iter % 2 ? "Some title" : "";
    const auto n = rng() % 6;
    for (std::size_t i = 0; i < n; ++i) {
      std::string text;
      const auto len = 1 + rng() % 8;
      for (std::size_t k = 0; k < len; ++k) text += (k ? " " : "") + words[rng() % words.size()];
      if (text[0] == '#') text = "x " + text;
      doc.requirements.push_back({"REQ-" + std::to_string(i * 3 + 1), corpus::normalize(text), i + 1, 0});
    }
    std::stringstream buf;
    corpus::write_numbered(buf, doc);
    const auto back = corpus::load_requirements(buf, Format::numbered, "ignored");
    EXPECT_EQ(back, doc) << buf.str();
  }
}

TEST(LoadRequirements, InvariantsOnGolden) {
  const auto doc = test::load_doc(test::data_path("corpus/emmon_fig3.txt"));
  std::set<std::string> ids;
  for (const auto& r : doc.requirements) {
    EXPECT_FALSE(r.id.empty());
    EXPECT_TRUE(ids.insert(r.id).second);
    EXPECT_EQ(corpus::normalize(r.text), r.text);
  }
}
