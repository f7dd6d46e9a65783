#include "cotir/nlp.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>

#include "cotir/error.hpp"

namespace cotir::nlp {

namespace {

constexpr std::array<std::string_view, 12> kTagNames = {
    "NOUN", "VERB", "MODAL", "ADJ", "ADV", "PRON", "DET", "ADP", "CONJ", "NUM", "PUNCT", "X"};

constexpr std::array<std::string_view, 38> kAbbreviations = {
    "e.g.", "i.e.", "etc.",  "fig.",  "figs.", "no.",   "nos.", "vs.",  "dr.",  "mr.",
    "mrs.", "ms.",  "prof.", "approx.", "sec.", "eq.", "cf.",  "al.",  "st.",  "ref.",
    "vol.", "pp.",  "ch.",   "tab.",  "max.",  "min.", "incl.", "dept.", "resp.", "viz.",
    "jan.", "feb.", "aug.",  "sept.", "oct.",  "nov.", "dec.", "est."};

bool is_abbreviation(std::string_view word_with_dot) {
  const auto lower = to_lower(word_with_dot);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) != kAbbreviations.end();
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::size_t utf8_len(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;
}

std::uint32_t utf8_cp(std::string_view s, std::size_t i, std::size_t len) {
  const auto c = static_cast<unsigned char>(s[i]);
  std::uint32_t cp = len == 1 ? c : len == 2 ? (c & 0x1F) : len == 3 ? (c & 0x0F) : (c & 0x07);
  for (std::size_t k = 1; k < len && i + k < s.size(); ++k) {
    cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
  }
  return cp;
}

// Multibyte characters count as letters unless they are punctuation or
// symbols from the Latin-1 and General Punctuation blocks.
bool is_word_char_at(std::string_view s, std::size_t i, std::size_t* len_out) {
  const auto c = static_cast<unsigned char>(s[i]);
  auto len = std::min(utf8_len(c), s.size() - i);
  if (len_out) *len_out = len;
  if (c < 0x80) return is_alnum(static_cast<char>(c));
  const auto cp = utf8_cp(s, i, len);
  if ((cp >= 0xA0 && cp <= 0xBF) || cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x206F) return false;
  return true;
}

bool is_internal_symbol(char c) {
  return c == '&' || c == '-' || c == '_' || c == '/' || c == '.' || c == '\'' || c == '@' ||
         c == '+';
}

bool is_punct_token(std::string_view t) {
  return std::none_of(t.begin(), t.end(), [](char c) {
    return is_alnum(c) || static_cast<unsigned char>(c) >= 0x80;
  }) || (t.size() > 1 && static_cast<unsigned char>(t[0]) >= 0x80 && !is_word_char_at(t, 0, nullptr));
}

bool starts_with_digit(std::string_view t) {
  return !t.empty() && std::isdigit(static_cast<unsigned char>(t[0]));
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool is_modal_word(std::string_view lower) {
  return lower == "shall" || lower == "must" || lower == "should" || lower == "will" ||
         lower == "may";
}

bool is_demonstrative(std::string_view lower) {
  return lower == "this" || lower == "that" || lower == "these" || lower == "those";
}

bool is_possessive_pronoun(std::string_view lower) {
  return lower == "my" || lower == "your" || lower == "his" || lower == "her" || lower == "its" ||
         lower == "our" || lower == "their";
}

bool contains(const std::vector<Tag>& tags, Tag t) {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

bool has_upper(std::string_view t) {
  return std::any_of(t.begin(), t.end(), [](char c) { return is_upper(c); });
}

bool all_upper_acronym(std::string_view t) {
  if (t.size() < 2) return false;
  bool letter = false;
  for (char c : t) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (!is_upper(c)) return false;
      letter = true;
    } else if (!std::isdigit(static_cast<unsigned char>(c)) && c != '&') {
      return false;
    }
  }
  return letter;
}

}  // namespace

std::string_view to_string(Tag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

std::optional<Tag> parse_tag(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<Tag>(i);
  }
  return std::nullopt;
}

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::ACRONYM:
      return "ACRONYM";
    case EntityKind::PROPER:
      return "PROPER";
    case EntityKind::QUOTED_LITERAL:
      return "QUOTED_LITERAL";
  }
  return "?";
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// ---------------------------------------------------------------------------
// sentence selection and tokenization

std::vector<Span> split_sentences(std::string_view text) {
  std::vector<Span> spans;
  const auto n = text.size();
  std::size_t start = 0;
  while (start < n && is_space(text[start])) ++start;

  for (std::size_t i = start; i < n; ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t j = i + 1;
    while (j < n && (text[j] == '"' || text[j] == '\'' || text[j] == ')' || text[j] == ']')) ++j;
    if (j >= n || !is_space(text[j])) continue;
    std::size_t k = j;
    while (k < n && is_space(text[k])) ++k;
    if (k >= n) continue;
    const bool capital = is_upper(text[k]) || ((text[k] == '"' || text[k] == '(' || text[k] == '\'') &&
                                               k + 1 < n && is_upper(text[k + 1]));
    if (!capital) continue;
    if (c == '.') {
      std::size_t w = i;
      while (w > start && (is_alnum(text[w - 1]) || text[w - 1] == '.')) --w;
      if (w < i && is_abbreviation(text.substr(w, i + 1 - w))) continue;
    }
    spans.push_back({start, j});
    start = k;
    i = k - 1;
  }
  std::size_t end = n;
  while (end > start && is_space(text[end - 1])) --end;
  if (start < end) spans.push_back({start, end});
  return spans;
}

std::vector<Token> tokenize(std::string_view s, std::size_t offset) {
  std::vector<Token> tokens;
  auto push = [&](std::size_t a, std::size_t b) {
    Token t;
    t.text.assign(s.substr(a, b - a));
    t.lemma = to_lower(t.text);
    t.span = {offset + a, offset + b};
    tokens.push_back(std::move(t));
  };
  const auto n = s.size();
  std::size_t i = 0;
  while (i < n) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    std::size_t len = 1;
    if (!is_word_char_at(s, i, &len)) {
      push(i, i + len);
      i += len;
      continue;
    }
    std::size_t j = i;
    while (j < n) {
      std::size_t l = 1;
      if (is_word_char_at(s, j, &l)) {
        j += l;
      } else if (is_internal_symbol(s[j]) && j + 1 < n && is_word_char_at(s, j + 1, nullptr)) {
        ++j;
      } else {
        break;
      }
    }
    if (j < n && s[j] == '.' && is_abbreviation(s.substr(i, j + 1 - i))) ++j;
    const auto word = s.substr(i, j - i);
    if (word.size() > 2 && (ends_with(word, "'s") || ends_with(word, "'S"))) {
      push(i, j - 2);
      push(j - 2, j);
    } else {
      push(i, j);
    }
    i = j;
  }
  return tokens;
}

// ---------------------------------------------------------------------------
// tag lexicon

TagLexicon TagLexicon::load(std::istream& in, const std::string& source_name) {
  TagLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError(source_name, line_no, "expected word<TAB>tag");
    }
    const auto tag = parse_tag(std::string_view(line).substr(tab + 1));
    if (!tag) throw ParseError(source_name, line_no, "unknown tag '" + line.substr(tab + 1) + "'");
    lex.add(std::string_view(line).substr(0, tab), *tag);
  }
  return lex;
}

TagLexicon TagLexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open tag lexicon: " + path);
  return load(in, path);
}

void TagLexicon::add(std::string_view word, Tag tag) {
  auto& tags = entries_[to_lower(word)];
  if (!contains(tags, tag)) tags.push_back(tag);
}

const std::vector<Tag>* TagLexicon::lookup(std::string_view word) const {
  auto it = entries_.find(to_lower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

bool TagLexicon::has(std::string_view word, Tag tag) const {
  const auto* tags = lookup(word);
  return tags && contains(*tags, tag);
}

// ---------------------------------------------------------------------------
// tagger

void PosTagger::tag(std::vector<Token>& tokens) const {
  const auto n = tokens.size();
  std::vector<std::vector<Tag>> cands(n);
  std::vector<std::string> lower(n);

  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = tokens[i].text;
    lower[i] = to_lower(t);
    if (is_punct_token(t)) {
      cands[i] = {Tag::PUNCT};
    } else if (starts_with_digit(t)) {
      cands[i] = {Tag::NUM};
    } else if (lower[i] == "'s") {
      cands[i] = {Tag::X};
    } else if (const auto* hit = lexicon_->lookup(t)) {
      cands[i] = *hit;
    } else if (auto dash = lower[i].rfind('-'); dash != std::string::npos && dash + 1 < t.size()) {
      // hyphenated compounds take the reading of their last part
      if (const auto* tail = lexicon_->lookup(std::string_view(lower[i]).substr(dash + 1))) {
        cands[i] = *tail;
      }
    }
  }

  auto first_of = [&](std::size_t j) -> std::optional<Tag> {
    if (j >= n || cands[j].empty()) return std::nullopt;
    return cands[j].front();
  };

  for (std::size_t i = 0; i < n; ++i) {
    auto& tok = tokens[i];
    const auto& w = lower[i];
    const std::optional<Tag> prev = i > 0 ? std::optional<Tag>(tokens[i - 1].pos) : std::nullopt;
    const std::string_view prev_word = i > 0 ? std::string_view(lower[i - 1]) : std::string_view();
    const auto next = first_of(i + 1);

    // previous tag ignoring adverbs, for participle context
    std::optional<Tag> prev_non_adv;
    for (std::size_t k = i; k > 0; --k) {
      if (tokens[k - 1].pos != Tag::ADV) {
        prev_non_adv = tokens[k - 1].pos;
        break;
      }
    }
    const bool verb_context = prev_non_adv == Tag::MODAL || prev_non_adv == Tag::VERB;

    if (is_modal_word(w)) {
      tok.pos = Tag::MODAL;
      continue;
    }
    const auto& c = cands[i];
    if (c.size() == 1) {
      tok.pos = c.front();
      continue;
    }
    if (c.size() > 1) {
      const bool noun = contains(c, Tag::NOUN);
      const bool verb = contains(c, Tag::VERB);
      const bool adj = contains(c, Tag::ADJ);
      const bool nominal_prev = prev == Tag::DET || prev == Tag::ADJ || prev == Tag::NUM ||
                                prev_word == "'s" || is_possessive_pronoun(prev_word);
      Tag pick = c.front();
      if (verb && (prev == Tag::MODAL || (prev_word == "to" && !ends_with(w, "s")))) {
        pick = Tag::VERB;
      } else if (noun && verb && is_demonstrative(prev_word) &&
                 (next == Tag::DET || next == Tag::PRON ||
                  (i + 1 < n && lower[i + 1] == "that"))) {
        pick = Tag::VERB;
      } else if (adj && next == Tag::NOUN && (noun || !verb || nominal_prev)) {
        pick = Tag::ADJ;
      } else if (nominal_prev && noun) {
        pick = Tag::NOUN;
      } else if (nominal_prev && adj) {
        pick = Tag::ADJ;
      } else if (verb && prev == Tag::PRON && !is_possessive_pronoun(prev_word)) {
        pick = Tag::VERB;
      } else if (noun && verb && prev == Tag::NOUN &&
                 (next == Tag::DET || next == Tag::PRON || next == Tag::NUM)) {
        pick = Tag::VERB;
      }
      tok.pos = pick;
      continue;
    }

    // unknown word: suffix rules
    Tag guess = Tag::X;
    if (w.size() > 3 && ends_with(w, "ly")) {
      guess = Tag::ADV;
    } else if (w.size() > 4 && (ends_with(w, "tion") || ends_with(w, "sion") ||
                                ends_with(w, "ment") || ends_with(w, "ness") ||
                                ends_with(w, "ity"))) {
      guess = Tag::NOUN;
    } else if (w.size() > 4 && (ends_with(w, "ize") || ends_with(w, "ise") || ends_with(w, "ify"))) {
      guess = Tag::VERB;
    } else if (w.size() > 4 && (ends_with(w, "ous") || ends_with(w, "ive") || ends_with(w, "al") ||
                                ends_with(w, "able") || ends_with(w, "ible") ||
                                ends_with(w, "ful") || ends_with(w, "less"))) {
      guess = Tag::ADJ;
    } else if (w.size() > 4 && ends_with(w, "ing")) {
      guess = Tag::VERB;
    } else if (w.size() > 3 && ends_with(w, "ed")) {
      guess = verb_context ? Tag::VERB : Tag::ADJ;
    } else if (w.size() > 3 && ends_with(w, "s") &&
               lexicon_->has(std::string_view(w).substr(0, w.size() - 1), Tag::NOUN)) {
      guess = Tag::NOUN;
    } else if (has_upper(tok.text)) {
      guess = Tag::NOUN;
    }
    if (guess == Tag::X && prev == Tag::DET) guess = Tag::NOUN;
    tok.pos = guess;
  }

  // demonstratives standing alone act as pronouns
  for (std::size_t i = 0; i < n; ++i) {
    if (tokens[i].pos != Tag::DET || !is_demonstrative(lower[i])) continue;
    const Tag next = i + 1 < n ? tokens[i + 1].pos : Tag::PUNCT;
    if (next == Tag::VERB || next == Tag::MODAL || next == Tag::PUNCT || next == Tag::ADP ||
        next == Tag::CONJ || next == Tag::DET || next == Tag::PRON || next == Tag::ADV) {
      tokens[i].pos = Tag::PRON;
    }
  }
}

// ---------------------------------------------------------------------------
// lemmatizer

std::unordered_map<std::string, std::string> Lemmatizer::load_irregular(
    std::istream& in, const std::string& source_name) {
  std::unordered_map<std::string, std::string> table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw ParseError(source_name, line_no, "expected word<TAB>lemma");
    }
    table[to_lower(line.substr(0, tab))] = to_lower(line.substr(tab + 1));
  }
  return table;
}

bool Lemmatizer::known(const std::string& w, Tag tag) const {
  return known_ && known_->has(w, tag);
}

std::string Lemmatizer::lemmatize(const Token& token) const {
  auto w = to_lower(token.text);
  if (token.pos != Tag::NOUN && token.pos != Tag::VERB) return w;
  if (auto it = irregular_.find(w); it != irregular_.end()) return it->second;
  if (token.pos == Tag::NOUN) {
    if (all_upper_acronym(token.text)) return w;
    return noun_lemma(w);
  }
  return verb_lemma(w);
}

std::string Lemmatizer::noun_lemma(const std::string& w) const {
  if (w.size() <= 3 || !ends_with(w, "s") || ends_with(w, "ss") || ends_with(w, "us") ||
      ends_with(w, "is")) {
    return w;
  }
  std::vector<std::string> candidates;
  if (ends_with(w, "ies")) candidates.push_back(w.substr(0, w.size() - 3) + "y");
  candidates.push_back(w.substr(0, w.size() - 1));
  if (ends_with(w, "es")) candidates.push_back(w.substr(0, w.size() - 2));
  for (const auto& c : candidates) {
    if (known(c, Tag::NOUN)) return c;
  }
  if (ends_with(w, "ies")) return candidates.front();
  if (ends_with(w, "sses") || ends_with(w, "xes") || ends_with(w, "zes") || ends_with(w, "ches") ||
      ends_with(w, "shes")) {
    return w.substr(0, w.size() - 2);
  }
  return w.substr(0, w.size() - 1);
}

std::string Lemmatizer::verb_lemma(const std::string& w) const {
  auto undouble = [](const std::string& s) -> std::optional<std::string> {
    if (s.size() >= 3 && s[s.size() - 1] == s[s.size() - 2] && !is_vowel(s.back()) &&
        s.back() != 'l' && s.back() != 's' && s.back() != 'z' && s.back() != 'f') {
      return s.substr(0, s.size() - 1);
    }
    return std::nullopt;
  };
  auto needs_e = [](const std::string& s) {
    static constexpr std::array<std::string_view, 26> kEndings = {
        "at", "it", "iz", "ut", "ov", "iv", "uc", "ud", "ag", "ib", "ir", "ur", "as",
        "os", "ys", "yz", "rg", "rc", "ng", "dl", "bl", "pl", "gl", "tl", "kl", "cl"};
    return std::any_of(kEndings.begin(), kEndings.end(),
                       [&](std::string_view e) { return ends_with(s, e); });
  };

  std::string stem;
  if (w.size() > 4 && ends_with(w, "ing")) {
    stem = w.substr(0, w.size() - 3);
  } else if (w.size() > 3 && ends_with(w, "ed")) {
    stem = w.substr(0, w.size() - 2);
    if (ends_with(stem, "i")) {
      const auto y = stem.substr(0, stem.size() - 1) + "y";
      if (known(y, Tag::VERB) || !known(stem, Tag::VERB)) return y;
    }
  } else if (w.size() > 3 && ends_with(w, "ies")) {
    return w.substr(0, w.size() - 3) + "y";
  } else if (w.size() > 3 && ends_with(w, "es")) {
    const auto drop_s = w.substr(0, w.size() - 1);
    const auto drop_es = w.substr(0, w.size() - 2);
    if (known(drop_s, Tag::VERB)) return drop_s;
    if (known(drop_es, Tag::VERB)) return drop_es;
    if (ends_with(drop_es, "ss") || ends_with(drop_es, "x") || ends_with(drop_es, "ch") ||
        ends_with(drop_es, "sh") || ends_with(drop_es, "z") || ends_with(drop_es, "o")) {
      return drop_es;
    }
    return drop_s;
  } else if (w.size() > 2 && ends_with(w, "s") && !ends_with(w, "ss")) {
    return w.substr(0, w.size() - 1);
  } else {
    return w;
  }

  if (known(stem, Tag::VERB)) return stem;
  if (known(stem + "e", Tag::VERB)) return stem + "e";
  if (auto u = undouble(stem); u && known(*u, Tag::VERB)) return *u;
  if (auto u = undouble(stem)) return *u;
  if (needs_e(stem)) return stem + "e";
  return stem;
}

// ---------------------------------------------------------------------------
// entities and chunks

std::vector<Entity> detect_entities(const std::vector<Token>& tokens, std::string_view text) {
  std::vector<Entity> out;
  const auto n = tokens.size();
  std::vector<bool> quoted(n, false);

  // quoted literals: consecutive pairs of double-quote tokens
  std::optional<std::size_t> open;
  for (std::size_t i = 0; i < n; ++i) {
    if (tokens[i].text != "\"") continue;
    if (!open) {
      open = i;
      continue;
    }
    if (*open + 1 < i) {
      const Span span{tokens[*open + 1].span.start, tokens[i - 1].span.end};
      out.push_back({EntityKind::QUOTED_LITERAL, span,
                     std::string(text.substr(span.start, span.size()))});
      for (std::size_t k = *open + 1; k < i; ++k) quoted[k] = true;
    }
    open.reset();
  }

  std::vector<bool> acronym(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = tokens[i];
    if (!all_upper_acronym(t.text)) continue;
    if (i == 0 && t.pos != Tag::NOUN && t.pos != Tag::X) continue;
    acronym[i] = true;
    out.push_back({EntityKind::ACRONYM, t.span, t.text});
  }

  auto proper_candidate = [&](std::size_t i) {
    const auto& t = tokens[i];
    return i > 0 && !acronym[i] && !quoted[i] && is_upper(t.text[0]) && t.text != "I" &&
           t.pos != Tag::PUNCT && t.pos != Tag::NUM;
  };
  for (std::size_t i = 0; i < n;) {
    if (!proper_candidate(i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && proper_candidate(j + 1)) ++j;
    const Span span{tokens[i].span.start, tokens[j].span.end};
    out.push_back({EntityKind::PROPER, span, std::string(text.substr(span.start, span.size()))});
    i = j + 1;
  }

  std::sort(out.begin(), out.end(), [](const Entity& a, const Entity& b) {
    if (a.span.start != b.span.start) return a.span.start < b.span.start;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  return out;
}

std::vector<Chunk> chunk(const std::vector<Token>& tokens) {
  std::vector<Chunk> out;
  const auto n = tokens.size();
  auto at = [&](std::size_t i) { return i < n ? tokens[i].pos : Tag::PUNCT; };
  std::size_t i = 0;
  while (i < n) {
    // NP = DET? (ADJ|NUM)* NOUN+
    std::size_t j = i;
    if (at(j) == Tag::DET) ++j;
    while (at(j) == Tag::ADJ || at(j) == Tag::NUM) ++j;
    const std::size_t nouns_start = j;
    while (at(j) == Tag::NOUN) ++j;
    if (j > nouns_start) {
      out.push_back({ChunkLabel::NP, i, j - 1});
      i = j;
      continue;
    }
    // VP = MODAL? ADV* VERB+
    j = i;
    if (at(j) == Tag::MODAL) ++j;
    while (at(j) == Tag::ADV) ++j;
    const std::size_t verbs_start = j;
    while (at(j) == Tag::VERB) ++j;
    if (j > verbs_start) {
      out.push_back({ChunkLabel::VP, i, j - 1});
      i = j;
      continue;
    }
    ++i;
  }
  return out;
}

bool AnalyzedSentence::in_entity(std::size_t i, EntityKind kind) const {
  const auto& s = tokens[i].span;
  return std::any_of(entities.begin(), entities.end(), [&](const Entity& e) {
    return e.kind == kind && e.span.start <= s.start && s.end <= e.span.end;
  });
}

bool AnalyzedSentence::in_any_entity(std::size_t i) const {
  return in_entity(i, EntityKind::ACRONYM) || in_entity(i, EntityKind::PROPER) ||
         in_entity(i, EntityKind::QUOTED_LITERAL);
}

AnalyzedText Pipeline::run(std::string_view text) const {
  AnalyzedText out;
  for (const auto& span : split_sentences(text)) {
    AnalyzedSentence s;
    s.span = span;
    s.tokens = tokenize(text.substr(span.start, span.size()), span.start);
    tagger_.tag(s.tokens);
    for (auto& t : s.tokens) t.lemma = lemmatizer_->lemmatize(t);
    s.entities = detect_entities(s.tokens, text);
    s.chunks = chunk(s.tokens);
    out.sentences.push_back(std::move(s));
  }
  return out;
}

}  // namespace cotir::nlp
