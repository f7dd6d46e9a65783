#include "cotir/recommend.hpp"

#include <algorithm>

namespace cotir::recommend {

using nlp::Tag;
using report::Subtype;

namespace {

Recommendation make(const Finding& f, std::string text, std::vector<report::Evidence> evidence = {}) {
  Recommendation r;
  r.finding_ref = {f.requirement_id, f.span};
  r.candidate_text = std::move(text);
  r.evidence = std::move(evidence);
  return r;
}

// Sentence and token index of the first token starting at span.start.
std::optional<std::pair<const nlp::AnalyzedSentence*, std::size_t>> locate(
    const nlp::AnalyzedText& text, nlp::Span span) {
  for (const auto& s : text.sentences) {
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (s.tokens[i].span.start == span.start) return std::make_pair(&s, i);
    }
  }
  return std::nullopt;
}

}  // namespace

std::string object_head(const nlp::AnalyzedText& text, nlp::Span span) {
  const auto where = locate(text, span);
  if (!where) return {};
  const auto& [s, verb] = *where;
  for (const auto& c : s->chunks) {
    if (c.label != nlp::ChunkLabel::NP || c.first <= verb) continue;
    // stop at material that starts a new clause
    for (auto i = verb + 1; i < c.first; ++i) {
      const auto p = s->tokens[i].pos;
      if (p == Tag::VERB || p == Tag::MODAL || p == Tag::PUNCT || p == Tag::CONJ) return {};
    }
    return s->tokens[c.last].lemma;
  }
  return {};
}

std::vector<Recommendation> recommend(const Finding& f, const corpus::Requirement& /*req*/,
                                      const nlp::AnalyzedText& text,
                                      const detector::Knowledge& k, int max_recommendations) {
  const auto limit = static_cast<std::size_t>(std::max(1, max_recommendations));
  std::vector<Recommendation> out;
  auto full = [&] { return out.size() >= limit; };

  switch (f.subtype) {
    case Subtype::VAGUE_VERB: {
      const auto& verb = f.lemma;
      const auto object = object_head(text, f.span);
      if (object.empty()) {
        out.push_back(make(f, "Clarify: specify what the system shall " + verb +
                                  ", and under which conditions."));
        break;
      }
      for (const auto& t : k.cskb.query(object, "hasProperty")) {
        if (full()) break;
        out.push_back(make(f,
                           "Clarify: specify how the system shall " + verb + " " + object +
                               " with respect to " + t.object + ".",
                           {t}));
      }
      if (out.empty()) {
        for (const auto* c : k.ontology.lookup(object)) {
          for (const auto& rel : k.ontology.outgoing(c->id, "has-attribute")) {
            if (full()) break;
            const auto* target = k.ontology.find(rel.target);
            out.push_back(make(f,
                               "Clarify: specify how the system shall " + verb + " " + object +
                                   " with respect to its " + target->label + ".",
                               {rel}));
          }
          break;
        }
      }
      if (out.empty()) {
        out.push_back(make(f, "Clarify: specify how the system shall " + verb + " " + object + "."));
      }
      break;
    }
    case Subtype::UNKNOWN_TERM: {
      const auto& term = f.lemma;
      out.push_back(make(f, "Define '" + term + "' in the glossary or domain ontology."));
      for (const auto& t : k.cskb.query(term)) {
        if (full()) break;
        out.push_back(make(f, "Candidate sense: " + term + " " + t.relation + " " + t.object + ".", {t}));
      }
      break;
    }
    case Subtype::LEXICAL_AMBIGUITY: {
      if (const auto* e = k.lex.ambiguity.find(f.lemma)) {
        for (const auto& g : e->glosses) {
          if (full()) break;
          out.push_back(make(f, "Disambiguate '" + f.lemma + "': intended sense — " + g + "."));
        }
      }
      if (out.empty()) {
        out.push_back(make(f, "Disambiguate '" + f.lemma + "': state the intended meaning."));
      }
      break;
    }
    case Subtype::WEAK_PHRASE:
    case Subtype::VAGUE_PHRASE:
      out.push_back(make(f, "Replace '" + f.trigger +
                                "' with a measurable condition (value, unit, threshold)."));
      break;
    case Subtype::STRUCTURAL_AMBIGUITY:
      if (f.lemma.starts_with("and ") || f.lemma.starts_with("or ")) {
        out.push_back(make(f, "Rewrite '" + f.trigger +
                                  "' so the grouping is explicit, using parentheses or separate "
                                  "requirements."));
      } else {
        out.push_back(make(f, "Rewrite '" + f.trigger +
                                  "' so it is clear which noun phrase the final phrase modifies."));
      }
      break;
    case Subtype::MISSING_AGENT:
      out.push_back(make(f, "Name the agent of '" + f.trigger +
                                "': state which component or user performs the action."));
      break;
    case Subtype::DANGLING_REFERENCE:
      out.push_back(make(f, "Replace '" + f.trigger + "' with the noun phrase it refers to."));
      break;
  }
  return out;
}

}  // namespace cotir::recommend
