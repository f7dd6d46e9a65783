#include "cotir/detector.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <tuple>

#include "cotir/recommend.hpp"

namespace cotir::detector {

using nlp::AnalyzedSentence;
using nlp::ChunkLabel;
using nlp::Tag;
using report::Category;

namespace {

constexpr std::string_view kIrregularParticiples[] = {
    "been",   "done",    "made",   "given",   "taken",  "kept",      "sent",    "shown",
    "known",  "seen",    "written", "built",  "held",   "set",       "put",     "read",
    "found",  "told",    "run",    "left",    "lost",   "paid",      "sold",    "bought",
    "brought", "caught", "taught", "thought", "chosen", "driven",    "broken",  "spoken",
    "stolen", "frozen",  "hidden", "forgotten", "begun", "drawn",    "grown",   "thrown",
    "understood", "meant", "cut",  "shut",    "spent",  "led",       "fed",     "met",
    "heard",  "sought",  "won",    "bound",   "overridden", "rewritten", "withdrawn"};

bool is_participle(const nlp::Token& t) {
  const auto w = nlp::to_lower(t.text);
  if (w.size() > 3 && w.ends_with("ed")) return t.pos == Tag::VERB;
  if (t.pos != Tag::VERB && t.pos != Tag::ADJ) return false;
  return std::find(std::begin(kIrregularParticiples), std::end(kIrregularParticiples), w) !=
         std::end(kIrregularParticiples);
}

std::string_view pos_word(Tag t) {
  switch (t) {
    case Tag::NOUN:
      return "a noun";
    case Tag::VERB:
      return "a verb";
    case Tag::ADJ:
      return "an adjective";
    default:
      return "a word";
  }
}

std::string join_lemmas(const AnalyzedSentence& s, std::size_t first, std::size_t last) {
  std::string out;
  for (std::size_t i = first; i <= last; ++i) {
    if (i > first) out.push_back(' ');
    out += s.tokens[i].lemma;
  }
  return out;
}

Finding make_finding(const corpus::Requirement& req, Subtype subtype, nlp::Span span,
                     std::string lemma, std::string rationale) {
  Finding f;
  f.requirement_id = req.id;
  f.subtype = subtype;
  f.category = report::category_of(subtype);
  f.span = span;
  f.trigger = req.text.substr(span.start, span.size());
  f.lemma = std::move(lemma);
  f.rationale = std::move(rationale);
  f.criticality = 0;
  return f;
}

Finding token_range_finding(const corpus::Requirement& req, const AnalyzedSentence& s,
                            Subtype subtype, std::size_t first, std::size_t last,
                            std::string rationale) {
  return make_finding(req, subtype, {s.tokens[first].span.start, s.tokens[last].span.end},
                      join_lemmas(s, first, last), std::move(rationale));
}

// Last NP chunk ending exactly at token index `last`.
const nlp::Chunk* np_ending_at(const AnalyzedSentence& s, std::size_t last) {
  for (const auto& c : s.chunks) {
    if (c.label == ChunkLabel::NP && c.last == last) return &c;
  }
  return nullptr;
}

std::string hex16(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

// ---------------------------------------------------------------------------

Suppressions load_suppressions(std::istream& in, const std::string& source_name) {
  Suppressions out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw ParseError(source_name, line_no, "expected doc_id<TAB>lemma");
    }
    out.emplace(line.substr(0, tab), line.substr(tab + 1));
  }
  return out;
}

void write_suppressions(std::ostream& out, const Suppressions& s) {
  out << "# doc_id<TAB>lemma: lexicon findings dropped for that document\n";
  for (const auto& [doc, lemma] : s) out << doc << '\t' << lemma << '\n';
}

int default_criticality(Subtype s) {
  switch (s) {
    case Subtype::WEAK_PHRASE:
      return 2;
    case Subtype::STRUCTURAL_AMBIGUITY:
    case Subtype::UNKNOWN_TERM:
      return 4;
    default:
      return 3;
  }
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_digest(std::uint64_t h) { return "fnv1a64:" + hex16(h); }

// ---------------------------------------------------------------------------
// detectors

std::vector<Finding> detect_lexical_ambiguity(const corpus::Requirement& req,
                                              const nlp::AnalyzedText& text,
                                              const knowledge::AmbiguityLexicon& lexicon) {
  std::vector<Finding> out;
  for (const auto& s : text.sentences) {
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      const auto& t = s.tokens[i];
      if (t.pos != Tag::NOUN && t.pos != Tag::VERB && t.pos != Tag::ADJ) continue;
      if (s.in_entity(i, nlp::EntityKind::QUOTED_LITERAL)) continue;
      const int senses = knowledge::sense_count(lexicon, t.lemma, t.pos);
      if (senses < 2) continue;
      out.push_back(token_range_finding(
          req, s, Subtype::LEXICAL_AMBIGUITY, i, i,
          "'" + t.lemma + "' has " + std::to_string(senses) + " senses as " +
              std::string(pos_word(t.pos))));
    }
  }
  return out;
}

std::vector<Finding> detect_vague_terms(const corpus::Requirement& req,
                                        const nlp::AnalyzedText& text,
                                        const knowledge::Lexicons& lex) {
  struct Match {
    std::size_t first;
    std::size_t len;
    Subtype subtype;
  };
  auto priority = [](Subtype s) {
    return s == Subtype::VAGUE_PHRASE ? 0 : s == Subtype::WEAK_PHRASE ? 1 : 2;
  };

  std::vector<Finding> out;
  for (const auto& s : text.sentences) {
    const auto n = s.tokens.size();
    std::vector<Match> matches;
    auto scan = [&](const knowledge::PhraseLexicon& phrases, Subtype subtype) {
      for (const auto& p : phrases.phrases()) {
        for (std::size_t i = 0; i + p.size() <= n; ++i) {
          bool hit = true;
          for (std::size_t k = 0; k < p.size() && hit; ++k) hit = s.tokens[i + k].lemma == p[k];
          if (hit) matches.push_back({i, p.size(), subtype});
        }
      }
    };
    scan(lex.vague_phrases, Subtype::VAGUE_PHRASE);
    scan(lex.weak_phrases, Subtype::WEAK_PHRASE);
    for (std::size_t i = 0; i < n; ++i) {
      if (s.tokens[i].pos == Tag::VERB && lex.vague_verbs.count(s.tokens[i].lemma)) {
        matches.push_back({i, 1, Subtype::VAGUE_VERB});
      }
    }
    std::sort(matches.begin(), matches.end(), [&](const Match& a, const Match& b) {
      return std::tuple(-static_cast<long>(a.len), a.first, priority(a.subtype)) <
             std::tuple(-static_cast<long>(b.len), b.first, priority(b.subtype));
    });
    std::vector<bool> taken(n, false);
    std::vector<Match> kept;
    for (const auto& m : matches) {
      if (std::any_of(taken.begin() + m.first, taken.begin() + m.first + m.len,
                      [](bool b) { return b; })) {
        continue;
      }
      std::fill(taken.begin() + m.first, taken.begin() + m.first + m.len, true);
      kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end(), [](const Match& a, const Match& b) { return a.first < b.first; });
    for (const auto& m : kept) {
      const auto lemma = join_lemmas(s, m.first, m.first + m.len - 1);
      std::string why;
      switch (m.subtype) {
        case Subtype::VAGUE_PHRASE:
          why = "'" + lemma + "' is a vague phrase with no measurable meaning";
          break;
        case Subtype::WEAK_PHRASE:
          why = "'" + lemma + "' weakens the requirement and leaves it open";
          break;
        default:
          why = "'" + lemma + "' is an imprecise verb that does not say what the system does";
          break;
      }
      out.push_back(token_range_finding(req, s, m.subtype, m.first, m.first + m.len - 1, why));
    }
  }
  return out;
}

std::vector<Finding> detect_structural_ambiguity(const corpus::Requirement& req,
                                                 const nlp::AnalyzedText& text) {
  std::vector<Finding> out;
  bool np_seen = false;  // an NP earlier in the requirement
  for (const auto& s : text.sentences) {
    const auto& tok = s.tokens;
    const auto n = tok.size();

    // (a) "X and Y or Z": and/or coordinators with only noun-phrase material
    // between them.
    for (std::size_t i = 0; i < n; ++i) {
      if (tok[i].pos != Tag::CONJ || (tok[i].lemma != "and" && tok[i].lemma != "or")) continue;
      const std::string_view other = tok[i].lemma == "and" ? "or" : "and";
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto p = tok[j].pos;
        if (p == Tag::CONJ && tok[j].lemma == other && j > i + 1) {
          out.push_back(token_range_finding(
              req, s, Subtype::STRUCTURAL_AMBIGUITY, i, j,
              "mixed 'and'/'or' coordination can be grouped in two ways"));
          break;
        }
        if (p != Tag::NOUN && p != Tag::ADJ && p != Tag::DET && p != Tag::NUM) break;
      }
    }

    // (b) a sentence-final prepositional phrase after two or more NPs
    std::size_t end = n;
    while (end > 0 && tok[end - 1].pos == Tag::PUNCT) --end;
    std::optional<std::size_t> adp;
    for (std::size_t i = 0; i < end; ++i) {
      if (tok[i].pos == Tag::ADP) adp = i;
    }
    if (adp && *adp > 0 && *adp + 1 < end) {
      const auto a = *adp;
      const auto* tail = np_ending_at(s, end - 1);
      const auto* head = np_ending_at(s, a - 1);
      const auto before = std::count_if(s.chunks.begin(), s.chunks.end(), [&](const nlp::Chunk& c) {
        return c.label == ChunkLabel::NP && c.last < a;
      });
      if (tail && tail->first == a + 1 && head && before >= 2) {
        auto first = head->first;
        if (tok[first].pos == Tag::DET && first < head->last) ++first;
        out.push_back(token_range_finding(
            req, s, Subtype::STRUCTURAL_AMBIGUITY, first, end - 1,
            "'" + tok[a].text + "' phrase at the end may attach to more than one noun phrase"));
      }
    }

    // passive without an agent
    for (std::size_t i = 0; i < n; ++i) {
      if (tok[i].lemma != "be" || tok[i].pos != Tag::VERB) continue;
      std::size_t j = i + 1;
      while (j < n && tok[j].pos == Tag::ADV) ++j;
      if (j >= n || !is_participle(tok[j])) continue;
      if (j + 1 < n && tok[j + 1].pos == Tag::NOUN) continue;
      const bool by = std::any_of(tok.begin() + static_cast<long>(j) + 1, tok.end(),
                                  [](const nlp::Token& t) { return t.lemma == "by"; });
      if (by) continue;
      out.push_back(token_range_finding(req, s, Subtype::MISSING_AGENT, i, j,
                                        "passive '" + tok[j].lemma + "' does not say who acts"));
    }

    // pronoun with no noun phrase before it
    std::size_t chunk_idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      while (chunk_idx < s.chunks.size() && s.chunks[chunk_idx].last < i) {
        if (s.chunks[chunk_idx].label == ChunkLabel::NP) np_seen = true;
        ++chunk_idx;
      }
      const auto& t = tok[i];
      if (t.pos != Tag::PRON || np_seen) continue;
      const auto w = nlp::to_lower(t.text);
      if (w != "it" && w != "they" && w != "this") continue;
      out.push_back(token_range_finding(req, s, Subtype::DANGLING_REFERENCE, i, i,
                                        "'" + t.text + "' has no noun phrase to refer back to"));
    }
    for (; chunk_idx < s.chunks.size(); ++chunk_idx) {
      if (s.chunks[chunk_idx].label == ChunkLabel::NP) np_seen = true;
    }
  }
  return out;
}

std::vector<Finding> detect_incomplete_knowledge(const corpus::Requirement& req,
                                                 const nlp::AnalyzedText& text,
                                                 const knowledge::Ontology& ontology,
                                                 const knowledge::LemmaSet& stoplist) {
  std::vector<Finding> out;
  for (const auto& s : text.sentences) {
    for (const auto& c : s.chunks) {
      if (c.label != ChunkLabel::NP) continue;
      // the trailing noun run of the phrase
      auto first = c.last;
      while (first > c.first && s.tokens[first - 1].pos == Tag::NOUN) --first;
      for (auto i = first; i <= c.last; ++i) {
        const auto& t = s.tokens[i];
        if (t.pos != Tag::NOUN || s.in_any_entity(i)) continue;
        if (stoplist.count(t.lemma)) continue;
        if (!std::any_of(t.lemma.begin(), t.lemma.end(),
                         [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)); })) {
          continue;
        }
        if (!knowledge::concept_lookup(ontology, t.lemma).empty()) continue;
        if (!knowledge::concept_lookup(ontology, t.text).empty()) continue;
        out.push_back(token_range_finding(req, s, Subtype::UNKNOWN_TERM, i, i,
                                          "'" + t.lemma + "' is not a concept in the domain ontology"));
      }
    }
  }
  return out;
}

bool has_binding_modal(const nlp::AnalyzedText& text) {
  for (const auto& s : text.sentences) {
    for (const auto& t : s.tokens) {
      if (t.pos == Tag::MODAL && (t.lemma == "shall" || t.lemma == "must")) return true;
    }
  }
  return false;
}

int score_criticality(const Finding& finding, bool binding_modal, const DetectorConfig& config) {
  int score = default_criticality(finding.subtype);
  if (auto it = config.rubric_overrides.find(finding.subtype); it != config.rubric_overrides.end()) {
    score = it->second;
  }
  if (binding_modal) ++score;
  return std::clamp(score, 1, 5);
}

void sort_canonical(std::vector<Finding>& findings, const corpus::RequirementDoc& doc) {
  std::map<std::string, std::size_t> ordinal;
  for (const auto& r : doc.requirements) ordinal[r.id] = r.ordinal;
  std::stable_sort(findings.begin(), findings.end(), [&](const Finding& a, const Finding& b) {
    return std::tuple(ordinal[a.requirement_id], a.span.start, static_cast<int>(a.subtype),
                      a.span.end, std::string_view(a.trigger)) <
           std::tuple(ordinal[b.requirement_id], b.span.start, static_cast<int>(b.subtype),
                      b.span.end, std::string_view(b.trigger));
  });
}

// ---------------------------------------------------------------------------

Analyzer::Analyzer(const Knowledge& knowledge, DetectorConfig config)
    : knowledge_(&knowledge),
      config_(std::move(config)),
      lemmatizer_(knowledge.lex.irregular, &knowledge.lex.tags),
      pipeline_(knowledge.lex.tags, lemmatizer_) {
  config_.max_recommendations = std::max(1, config_.max_recommendations);
}

std::vector<Finding> Analyzer::detect(const corpus::Requirement& req, const std::string& doc_id,
                                      const nlp::AnalyzedText& text) const {
  const auto& k = *knowledge_;
  std::vector<Finding> all = detect_lexical_ambiguity(req, text, k.lex.ambiguity);
  auto append = [&](std::vector<Finding> more) {
    all.insert(all.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  append(detect_vague_terms(req, text, k.lex));
  append(detect_structural_ambiguity(req, text));
  append(detect_incomplete_knowledge(req, text, k.ontology, k.lex.stoplist));

  std::erase_if(all, [&](const Finding& f) {
    return report::lexicon_driven(f.subtype) && k.suppressions.count({doc_id, f.lemma});
  });
  const bool modal = has_binding_modal(text);
  for (auto& f : all) f.criticality = score_criticality(f, modal, config_);

  corpus::RequirementDoc one;
  one.requirements.push_back(req);
  sort_canonical(all, one);
  return all;
}

AnalysisReport Analyzer::analyze(const corpus::RequirementDoc& doc) const {
  AnalysisReport out;
  out.doc_id = doc.doc_id;
  out.title = doc.title;
  out.requirements = doc.requirements;

  std::string settings = knowledge_->digest;
  settings += "|max_recommendations=" + std::to_string(config_.max_recommendations);
  for (const auto& [subtype, value] : config_.rubric_overrides) {
    settings += "|rubric." + std::string(report::to_string(subtype)) + "=" + std::to_string(value);
  }
  for (const auto& [d, l] : knowledge_->suppressions) settings += "|suppress=" + d + "/" + l;
  out.config_digest = format_digest(fnv1a64(settings));

  std::size_t finding_no = 0;
  std::size_t rec_no = 0;
  for (const auto& req : doc.requirements) {
    const auto text = pipeline_.run(req.text);
    for (auto& f : detect(req, doc.doc_id, text)) {
      f.id = "F" + std::to_string(++finding_no);
      f.recommendations =
          recommend::recommend(f, req, text, *knowledge_, config_.max_recommendations);
      for (auto& r : f.recommendations) r.id = "rec-" + std::to_string(++rec_no);
      out.findings.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace cotir::detector
