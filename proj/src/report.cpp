#include "cotir/report.hpp"

#include <array>
#include <fstream>

namespace cotir::report {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::array<std::string_view, 4> kCategoryNames = {"A", "V", "IK", "O"};
constexpr std::array<std::string_view, 8> kSubtypeNames = {
    "LEXICAL_AMBIGUITY", "STRUCTURAL_AMBIGUITY", "VAGUE_PHRASE",  "VAGUE_VERB",
    "WEAK_PHRASE",       "UNKNOWN_TERM",         "MISSING_AGENT", "DANGLING_REFERENCE"};
constexpr std::array<std::string_view, 3> kStatusNames = {"PROPOSED", "APPROVED", "REJECTED"};

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<std::string_view, N>& names, std::string_view s) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == s) return static_cast<E>(i);
  }
  return std::nullopt;
}

template <typename T>
T field(const json& j, const char* key, std::string_view where) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(std::string(where) + ": missing field '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(std::string(where) + ": field '" + key + "' has the wrong type");
  }
}

nlp::Span span_from(const json& j, std::string_view where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned()) {
    throw Error(std::string(where) + ": span must be [start, end]");
  }
  return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

Evidence evidence_from(const json& j, std::string_view where) {
  const auto kind = field<std::string>(j, "kind", where);
  if (kind == "csk") {
    return knowledge::CskTriple{field<std::string>(j, "subject", where),
                                field<std::string>(j, "relation", where),
                                field<std::string>(j, "object", where),
                                field<double>(j, "confidence", where)};
  }
  if (kind == "ontology") {
    return knowledge::Relation{field<std::string>(j, "relation", where),
                               field<std::string>(j, "source", where),
                               field<std::string>(j, "target", where)};
  }
  throw Error(std::string(where) + ": unknown evidence kind '" + kind + "'");
}

}  // namespace

Category category_of(Subtype s) {
  switch (s) {
    case Subtype::LEXICAL_AMBIGUITY:
    case Subtype::STRUCTURAL_AMBIGUITY:
      return Category::A;
    case Subtype::VAGUE_PHRASE:
    case Subtype::VAGUE_VERB:
    case Subtype::WEAK_PHRASE:
      return Category::V;
    case Subtype::UNKNOWN_TERM:
      return Category::IK;
    case Subtype::MISSING_AGENT:
    case Subtype::DANGLING_REFERENCE:
      return Category::O;
  }
  return Category::O;
}

bool lexicon_driven(Subtype s) {
  return s == Subtype::LEXICAL_AMBIGUITY || s == Subtype::VAGUE_PHRASE ||
         s == Subtype::VAGUE_VERB || s == Subtype::WEAK_PHRASE;
}

std::string_view to_string(Category c) { return kCategoryNames[static_cast<std::size_t>(c)]; }
std::string_view to_string(Subtype s) { return kSubtypeNames[static_cast<std::size_t>(s)]; }
std::string_view to_string(Status s) { return kStatusNames[static_cast<std::size_t>(s)]; }

std::optional<Category> parse_category(std::string_view s) {
  return lookup<Category>(kCategoryNames, s);
}
std::optional<Subtype> parse_subtype(std::string_view s) { return lookup<Subtype>(kSubtypeNames, s); }
std::optional<Status> parse_status(std::string_view s) { return lookup<Status>(kStatusNames, s); }

const corpus::Requirement* AnalysisReport::requirement(std::string_view id) const {
  for (const auto& r : requirements) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

const Finding* AnalysisReport::finding(std::string_view id) const {
  for (const auto& f : findings) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

const Recommendation* AnalysisReport::recommendation(std::string_view id) const {
  for (const auto& f : findings) {
    for (const auto& r : f.recommendations) {
      if (r.id == id) return &r;
    }
  }
  return nullptr;
}

Recommendation* AnalysisReport::recommendation(std::string_view id) {
  return const_cast<Recommendation*>(std::as_const(*this).recommendation(id));
}

ordered_json evidence_to_json(const Evidence& e) {
  ordered_json j;
  if (const auto* t = std::get_if<knowledge::CskTriple>(&e)) {
    j["kind"] = "csk";
    j["subject"] = t->subject;
    j["relation"] = t->relation;
    j["object"] = t->object;
    j["confidence"] = t->confidence;
  } else {
    const auto& r = std::get<knowledge::Relation>(e);
    j["kind"] = "ontology";
    j["relation"] = r.name;
    j["source"] = r.source;
    j["target"] = r.target;
  }
  return j;
}

ordered_json to_json(const Recommendation& r) {
  ordered_json j;
  j["id"] = r.id;
  j["finding_ref"] = {{"requirement_id", r.finding_ref.requirement_id},
                      {"span", {r.finding_ref.span.start, r.finding_ref.span.end}}};
  j["candidate_text"] = r.candidate_text;
  j["evidence"] = ordered_json::array();
  for (const auto& e : r.evidence) j["evidence"].push_back(evidence_to_json(e));
  j["status"] = to_string(r.status);
  j["decided_by"] = r.decided_by ? ordered_json(*r.decided_by) : ordered_json(nullptr);
  j["decided_at"] = r.decided_at ? ordered_json(*r.decided_at) : ordered_json(nullptr);
  j["decisions"] = ordered_json::array();
  for (const auto& d : r.decisions) {
    ordered_json dj;
    dj["expert_id"] = d.expert_id;
    dj["decision"] = d.decision == Status::APPROVED ? "APPROVE" : "REJECT";
    dj["criticality"] = d.criticality ? ordered_json(*d.criticality) : ordered_json(nullptr);
    dj["note"] = d.note ? ordered_json(*d.note) : ordered_json(nullptr);
    dj["timestamp"] = d.timestamp;
    j["decisions"].push_back(std::move(dj));
  }
  return j;
}

ordered_json to_json(const Finding& f) {
  ordered_json j;
  j["id"] = f.id;
  j["requirement_id"] = f.requirement_id;
  j["category"] = to_string(f.category);
  j["subtype"] = to_string(f.subtype);
  j["span"] = {f.span.start, f.span.end};
  j["trigger"] = f.trigger;
  j["lemma"] = f.lemma;
  j["criticality"] = f.criticality;
  j["rationale"] = f.rationale;
  j["recommendations"] = ordered_json::array();
  for (const auto& r : f.recommendations) j["recommendations"].push_back(to_json(r));
  return j;
}

ordered_json to_json(const AnalysisReport& r) {
  ordered_json j;
  j["schema"] = kSchema;
  j["doc_id"] = r.doc_id;
  j["title"] = r.title;
  j["config_digest"] = r.config_digest;
  j["requirements"] = ordered_json::array();
  for (const auto& q : r.requirements) {
    j["requirements"].push_back({{"id", q.id}, {"ordinal", q.ordinal}, {"text", q.text}});
  }
  j["findings"] = ordered_json::array();
  for (const auto& f : r.findings) j["findings"].push_back(to_json(f));
  return j;
}

AnalysisReport report_from_json(const json& j) {
  if (!j.is_object()) throw Error("report: expected a JSON object");
  const auto schema = field<std::string>(j, "schema", "report");
  if (schema != kSchema) throw Error("report: unsupported schema '" + schema + "'");
  AnalysisReport r;
  r.doc_id = field<std::string>(j, "doc_id", "report");
  r.title = field<std::string>(j, "title", "report");
  r.config_digest = field<std::string>(j, "config_digest", "report");
  for (const auto& q : field<json>(j, "requirements", "report")) {
    corpus::Requirement req;
    req.id = field<std::string>(q, "id", "requirement");
    req.ordinal = field<std::size_t>(q, "ordinal", "requirement " + req.id);
    req.text = field<std::string>(q, "text", "requirement " + req.id);
    r.requirements.push_back(std::move(req));
  }
  for (const auto& fj : field<json>(j, "findings", "report")) {
    Finding f;
    f.id = field<std::string>(fj, "id", "finding");
    const auto where = "finding " + f.id;
    f.requirement_id = field<std::string>(fj, "requirement_id", where);
    const auto* req = r.requirement(f.requirement_id);
    if (!req) throw Error(where + ": unknown requirement '" + f.requirement_id + "'");
    const auto cat = parse_category(field<std::string>(fj, "category", where));
    const auto sub = parse_subtype(field<std::string>(fj, "subtype", where));
    if (!cat || !sub) throw Error(where + ": unknown category or subtype");
    if (category_of(*sub) != *cat) throw Error(where + ": category does not match subtype");
    f.category = *cat;
    f.subtype = *sub;
    f.span = span_from(field<json>(fj, "span", where), where);
    if (f.span.start >= f.span.end || f.span.end > req->text.size()) {
      throw Error(where + ": span outside the requirement text");
    }
    f.trigger = field<std::string>(fj, "trigger", where);
    if (req->text.compare(f.span.start, f.span.size(), f.trigger) != 0) {
      throw Error(where + ": trigger does not match the text at its span");
    }
    f.lemma = field<std::string>(fj, "lemma", where);
    f.criticality = field<int>(fj, "criticality", where);
    if (f.criticality < 1 || f.criticality > 5) throw Error(where + ": criticality outside 1..5");
    f.rationale = field<std::string>(fj, "rationale", where);
    for (const auto& rj : field<json>(fj, "recommendations", where)) {
      Recommendation rec;
      rec.id = field<std::string>(rj, "id", where + " recommendation");
      const auto rw = "recommendation " + rec.id;
      const auto ref = field<json>(rj, "finding_ref", rw);
      rec.finding_ref.requirement_id = field<std::string>(ref, "requirement_id", rw);
      rec.finding_ref.span = span_from(field<json>(ref, "span", rw), rw);
      if (rec.finding_ref.requirement_id != f.requirement_id || rec.finding_ref.span != f.span) {
        throw Error(rw + ": finding_ref does not match its finding");
      }
      rec.candidate_text = field<std::string>(rj, "candidate_text", rw);
      if (rec.candidate_text.empty()) throw Error(rw + ": empty candidate_text");
      for (const auto& ej : field<json>(rj, "evidence", rw)) rec.evidence.push_back(evidence_from(ej, rw));
      const auto status = parse_status(field<std::string>(rj, "status", rw));
      if (!status) throw Error(rw + ": unknown status");
      rec.status = *status;
      if (rj.contains("decided_by") && !rj["decided_by"].is_null()) {
        rec.decided_by = field<std::string>(rj, "decided_by", rw);
      }
      if (rj.contains("decided_at") && !rj["decided_at"].is_null()) {
        rec.decided_at = field<std::string>(rj, "decided_at", rw);
      }
      if ((rec.status == Status::PROPOSED) != !rec.decided_by) {
        throw Error(rw + ": status PROPOSED must go with an absent decided_by");
      }
      if (rj.contains("decisions")) {
        for (const auto& dj : rj["decisions"]) {
          ExpertDecision d;
          d.expert_id = field<std::string>(dj, "expert_id", rw);
          const auto dec = field<std::string>(dj, "decision", rw);
          if (dec != "APPROVE" && dec != "REJECT") throw Error(rw + ": bad decision '" + dec + "'");
          d.decision = dec == "APPROVE" ? Status::APPROVED : Status::REJECTED;
          if (dj.contains("criticality") && !dj["criticality"].is_null()) {
            d.criticality = field<int>(dj, "criticality", rw);
          }
          if (dj.contains("note") && !dj["note"].is_null()) d.note = field<std::string>(dj, "note", rw);
          d.timestamp = field<std::uint64_t>(dj, "timestamp", rw);
          rec.decisions.push_back(std::move(d));
        }
      }
      f.recommendations.push_back(std::move(rec));
    }
    r.findings.push_back(std::move(f));
  }
  return r;
}

std::string dump(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

AnalysisReport load_report_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open report: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
  return report_from_json(j);
}

}  // namespace cotir::report
