#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cotir::nlp {

// Coarse part-of-speech tagset. All detector rules are written against it.
enum class Tag { NOUN, VERB, MODAL, ADJ, ADV, PRON, DET, ADP, CONJ, NUM, PUNCT, X };

std::string_view to_string(Tag tag);
std::optional<Tag> parse_tag(std::string_view name);

// Half-open byte range [start, end) into the requirement text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool overlaps(const Span& o) const { return start < o.end && o.start < end; }
  friend auto operator<=>(const Span&, const Span&) = default;
};

struct Token {
  std::string text;
  std::string lemma;
  Tag pos = Tag::X;
  Span span;

  friend bool operator==(const Token&, const Token&) = default;
};

enum class ChunkLabel { NP, VP };

// Token indices [first, last] within one sentence.
struct Chunk {
  ChunkLabel label = ChunkLabel::NP;
  std::size_t first = 0;
  std::size_t last = 0;

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

enum class EntityKind { ACRONYM, PROPER, QUOTED_LITERAL };

std::string_view to_string(EntityKind kind);

struct Entity {
  EntityKind kind = EntityKind::ACRONYM;
  Span span;
  std::string surface;

  friend bool operator==(const Entity&, const Entity&) = default;
};

// Sentence boundaries: . ! ? followed by whitespace and a capital letter,
// except after a known abbreviation. Spans cover all non-whitespace text.
std::vector<Span> split_sentences(std::string_view text);

// Splits on whitespace and punctuation. Words with internal symbols
// ("C&C", "real-time", "1.5") stay whole; a possessive "'s" becomes its own
// token. Spans are shifted by `offset`. Tokens come back with pos X and
// lemma set to the lowercased text.
std::vector<Token> tokenize(std::string_view sentence, std::size_t offset = 0);

std::string to_lower(std::string_view s);

// word -> candidate tags, first is the default reading.
class TagLexicon {
 public:
  static TagLexicon load(std::istream& in, const std::string& source_name = "<tags>");
  static TagLexicon load_file(const std::string& path);

  void add(std::string_view word, Tag tag);
  const std::vector<Tag>* lookup(std::string_view word) const;  // case-insensitive
  bool has(std::string_view word, Tag tag) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<Tag>> entries_;
};

class PosTagger {
 public:
  explicit PosTagger(const TagLexicon& lexicon) : lexicon_(&lexicon) {}

  // Lexicon lookup, then suffix rules for unknown words, then context
  // rules. Every token leaves with a tag.
  void tag(std::vector<Token>& tokens) const;

 private:
  const TagLexicon* lexicon_;
};

class Lemmatizer {
 public:
  Lemmatizer() = default;
  // `known` is consulted to pick between candidate stems (support+ed vs
  // handle+d); it may be null.
  Lemmatizer(std::unordered_map<std::string, std::string> irregular, const TagLexicon* known)
      : irregular_(std::move(irregular)), known_(known) {}

  static std::unordered_map<std::string, std::string> load_irregular(
      std::istream& in, const std::string& source_name = "<lemmas>");

  std::string lemmatize(const Token& token) const;

 private:
  std::string noun_lemma(const std::string& w) const;
  std::string verb_lemma(const std::string& w) const;
  bool known(const std::string& w, Tag tag) const;

  std::unordered_map<std::string, std::string> irregular_;
  const TagLexicon* known_ = nullptr;
};

// Entities over one sentence's tagged tokens. `text` is the requirement
// text the spans index into.
std::vector<Entity> detect_entities(const std::vector<Token>& tokens, std::string_view text);

// Greedy left-to-right chunking over tags:
//   NP = DET? (ADJ|NUM)* NOUN+
//   VP = MODAL? ADV* VERB+
std::vector<Chunk> chunk(const std::vector<Token>& tokens);

struct AnalyzedSentence {
  Span span;
  std::vector<Token> tokens;
  std::vector<Entity> entities;
  std::vector<Chunk> chunks;

  // Whether token i lies inside an entity of the given kind.
  bool in_entity(std::size_t i, EntityKind kind) const;
  bool in_any_entity(std::size_t i) const;
};

struct AnalyzedText {
  std::vector<AnalyzedSentence> sentences;
};

// The full NL processor: sentence selection, tokenization, tagging,
// lemmatization, entity detection and chunking.
class Pipeline {
 public:
  Pipeline(const TagLexicon& tags, const Lemmatizer& lemmatizer)
      : tagger_(tags), lemmatizer_(&lemmatizer) {}

  AnalyzedText run(std::string_view text) const;

 private:
  PosTagger tagger_;
  const Lemmatizer* lemmatizer_;
};

}  // namespace cotir::nlp
