#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cotir/corpus.hpp"
#include "cotir/knowledge.hpp"
#include "cotir/nlp.hpp"
#include "cotir/report.hpp"

namespace cotir::detector {

using report::AnalysisReport;
using report::Finding;
using report::Subtype;

// (doc_id, lemma) pairs whose lexicon-driven findings are dropped.
using Suppressions = std::set<std::pair<std::string, std::string>>;

Suppressions load_suppressions(std::istream& in, const std::string& source_name = "<suppressions>");
void write_suppressions(std::ostream& out, const Suppressions& s);

// All knowledge artifacts one analysis run reads.
struct Knowledge {
  knowledge::Lexicons lex;
  knowledge::Ontology ontology;
  knowledge::Cskb cskb;
  Suppressions suppressions;
  // Identifies the artifact versions; set by whoever loads the files.
  std::string digest;
};

struct DetectorConfig {
  std::map<Subtype, int> rubric_overrides;
  int max_recommendations = 3;
};

// Default criticality per subtype before overrides and the modal bump.
int default_criticality(Subtype s);

// FNV-1a 64-bit, printed as "fnv1a64:<16 hex digits>".
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string format_digest(std::uint64_t h);

// The detect_* functions return findings with criticality 0 and no id;
// analyze() scores and numbers them.
std::vector<Finding> detect_lexical_ambiguity(const corpus::Requirement& req,
                                              const nlp::AnalyzedText& text,
                                              const knowledge::AmbiguityLexicon& lexicon);

std::vector<Finding> detect_vague_terms(const corpus::Requirement& req,
                                        const nlp::AnalyzedText& text,
                                        const knowledge::Lexicons& lex);

// STRUCTURAL_AMBIGUITY, MISSING_AGENT and DANGLING_REFERENCE.
std::vector<Finding> detect_structural_ambiguity(const corpus::Requirement& req,
                                                 const nlp::AnalyzedText& text);

std::vector<Finding> detect_incomplete_knowledge(const corpus::Requirement& req,
                                                 const nlp::AnalyzedText& text,
                                                 const knowledge::Ontology& ontology,
                                                 const knowledge::LemmaSet& stoplist);

// Whether the requirement has a MODAL token with lemma shall or must.
bool has_binding_modal(const nlp::AnalyzedText& text);

int score_criticality(const Finding& finding, bool binding_modal, const DetectorConfig& config);

// Findings ordered by (requirement ordinal, span start, subtype), with span
// end and trigger as final tie breakers.
void sort_canonical(std::vector<Finding>& findings, const corpus::RequirementDoc& doc);

class Analyzer {
 public:
  Analyzer(const Knowledge& knowledge, DetectorConfig config = {});

  nlp::AnalyzedText process(std::string_view text) const { return pipeline_.run(text); }

  // Runs every detector on one requirement, drops suppressed findings and
  // scores the rest. Findings come back unnumbered and in canonical order.
  std::vector<Finding> detect(const corpus::Requirement& req, const std::string& doc_id,
                              const nlp::AnalyzedText& text) const;

  AnalysisReport analyze(const corpus::RequirementDoc& doc) const;

  const Knowledge& knowledge() const { return *knowledge_; }
  const DetectorConfig& config() const { return config_; }

 private:
  const Knowledge* knowledge_;
  DetectorConfig config_;
  nlp::Lemmatizer lemmatizer_;
  nlp::Pipeline pipeline_;
};

}  // namespace cotir::detector
