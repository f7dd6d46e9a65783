#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cotir/corpus.hpp"
#include "cotir/knowledge.hpp"
#include "cotir/nlp.hpp"

namespace cotir::report {

inline constexpr std::string_view kSchema = "cotir.report/1";

enum class Category { A, V, IK, O };

enum class Subtype {
  LEXICAL_AMBIGUITY,
  STRUCTURAL_AMBIGUITY,
  VAGUE_PHRASE,
  VAGUE_VERB,
  WEAK_PHRASE,
  UNKNOWN_TERM,
  MISSING_AGENT,
  DANGLING_REFERENCE,
};

inline constexpr Subtype kAllSubtypes[] = {
    Subtype::LEXICAL_AMBIGUITY, Subtype::STRUCTURAL_AMBIGUITY, Subtype::VAGUE_PHRASE,
    Subtype::VAGUE_VERB,        Subtype::WEAK_PHRASE,          Subtype::UNKNOWN_TERM,
    Subtype::MISSING_AGENT,     Subtype::DANGLING_REFERENCE,
};

Category category_of(Subtype s);
// Findings driven by a lexicon entry; these are the ones a rejection can
// suppress.
bool lexicon_driven(Subtype s);

std::string_view to_string(Category c);
std::string_view to_string(Subtype s);
std::optional<Category> parse_category(std::string_view s);
std::optional<Subtype> parse_subtype(std::string_view s);

enum class Status { PROPOSED, APPROVED, REJECTED };
std::string_view to_string(Status s);
std::optional<Status> parse_status(std::string_view s);

using Evidence = std::variant<knowledge::CskTriple, knowledge::Relation>;

struct FindingRef {
  std::string requirement_id;
  nlp::Span span;

  friend bool operator==(const FindingRef&, const FindingRef&) = default;
};

// One expert's latest decision on a recommendation.
struct ExpertDecision {
  std::string expert_id;
  Status decision = Status::PROPOSED;  // APPROVED or REJECTED
  std::optional<int> criticality;
  std::optional<std::string> note;
  std::uint64_t timestamp = 0;

  friend bool operator==(const ExpertDecision&, const ExpertDecision&) = default;
};

struct Recommendation {
  std::string id;
  FindingRef finding_ref;
  std::string candidate_text;
  std::vector<Evidence> evidence;
  Status status = Status::PROPOSED;
  std::optional<std::string> decided_by;
  std::optional<std::string> decided_at;
  std::vector<ExpertDecision> decisions;  // per expert, by expert id

  friend bool operator==(const Recommendation&, const Recommendation&) = default;
};

struct Finding {
  std::string id;
  std::string requirement_id;
  Category category = Category::A;
  Subtype subtype = Subtype::LEXICAL_AMBIGUITY;
  nlp::Span span;
  std::string trigger;
  std::string lemma;  // lemma sequence of the trigger tokens, space-joined
  int criticality = 1;
  std::string rationale;
  std::vector<Recommendation> recommendations;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct AnalysisReport {
  std::string doc_id;
  std::string title;
  std::string config_digest;
  std::vector<corpus::Requirement> requirements;
  std::vector<Finding> findings;

  const corpus::Requirement* requirement(std::string_view id) const;
  const Finding* finding(std::string_view id) const;
  const Recommendation* recommendation(std::string_view id) const;
  Recommendation* recommendation(std::string_view id);

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

nlohmann::ordered_json evidence_to_json(const Evidence& e);
nlohmann::ordered_json to_json(const Recommendation& r);
nlohmann::ordered_json to_json(const Finding& f);
nlohmann::ordered_json to_json(const AnalysisReport& r);

// Throws cotir::Error on a missing field, a wrong schema id, or values that
// break the Finding / Recommendation invariants.
AnalysisReport report_from_json(const nlohmann::json& j);

// Pretty-printed JSON with a trailing newline.
std::string dump(const AnalysisReport& r);
AnalysisReport load_report_file(const std::string& path);

}  // namespace cotir::report
