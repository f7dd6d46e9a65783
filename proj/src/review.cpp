#include "cotir/review.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <chrono>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cotir::review {

using nlohmann::ordered_json;

namespace {

std::string now_utc() {
  const auto now = std::chrono::system_clock::now();
  const auto secs = std::chrono::system_clock::to_time_t(now);
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof(out), "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

[[noreturn]] void sys_fail(const std::string& what, const std::string& path) {
  throw Error(what + " '" + path + "': " + std::strerror(errno));
}

}  // namespace

std::string_view to_string(Decision d) { return d == Decision::APPROVE ? "APPROVE" : "REJECT"; }

std::optional<Decision> parse_decision(std::string_view s) {
  if (s == "APPROVE") return Decision::APPROVE;
  if (s == "REJECT") return Decision::REJECT;
  return std::nullopt;
}

ordered_json to_json(const Adjudication& a) {
  ordered_json j;
  j["recommendation_id"] = a.recommendation_id;
  j["expert_id"] = a.expert_id;
  j["decision"] = to_string(a.decision);
  if (a.criticality) j["criticality"] = *a.criticality;
  if (a.note) j["note"] = *a.note;
  j["timestamp"] = a.timestamp;
  j["recorded_at"] = a.recorded_at;
  return j;
}

Adjudication adjudication_from_json(const nlohmann::json& j, bool require_timestamp) {
  if (!j.is_object()) throw ValidationError("adjudication must be a JSON object");
  auto str = [&](const char* key, bool required) -> std::optional<std::string> {
    if (!j.contains(key) || j[key].is_null()) {
      if (required) throw ValidationError(std::string("missing field '") + key + "'");
      return std::nullopt;
    }
    if (!j[key].is_string()) throw ValidationError(std::string("field '") + key + "' must be a string");
    return j[key].get<std::string>();
  };
  Adjudication a;
  a.recommendation_id = *str("recommendation_id", true);
  a.expert_id = str("expert_id", false).value_or("");
  const auto decision = *str("decision", true);
  const auto d = parse_decision(decision);
  if (!d) throw ValidationError("decision must be APPROVE or REJECT, got '" + decision + "'");
  a.decision = *d;
  if (j.contains("criticality") && !j["criticality"].is_null()) {
    if (!j["criticality"].is_number_integer()) throw ValidationError("criticality must be an integer");
    a.criticality = j["criticality"].get<int>();
  }
  a.note = str("note", false);
  if (require_timestamp) {
    if (!j.contains("timestamp") || !j["timestamp"].is_number_unsigned()) {
      throw ValidationError("missing or invalid 'timestamp'");
    }
    a.timestamp = j["timestamp"].get<std::uint64_t>();
    a.recorded_at = str("recorded_at", false).value_or("");
  }
  return a;
}

Status aggregate(const std::vector<report::ExpertDecision>& latest) {
  bool approve = false;
  for (const auto& d : latest) {
    if (d.decision == Status::REJECTED) return Status::REJECTED;
    if (d.decision == Status::APPROVED) approve = true;
  }
  return approve ? Status::APPROVED : Status::PROPOSED;
}

// ---------------------------------------------------------------------------

ReviewState::ReviewState(AnalysisReport base) : report_(std::move(base)) {
  // decisions embedded in the input are discarded; the log is the source of truth
  for (auto& f : report_.findings) {
    for (auto& r : f.recommendations) {
      r.status = Status::PROPOSED;
      r.decided_by.reset();
      r.decided_at.reset();
      r.decisions.clear();
    }
  }
}

void ReviewState::validate(const Adjudication& a) const {
  if (!report_.recommendation(a.recommendation_id)) {
    throw NotFoundError("unknown recommendation '" + a.recommendation_id + "'");
  }
  if (a.expert_id.empty()) throw ValidationError("expert_id is required");
  if (a.criticality && (*a.criticality < 1 || *a.criticality > 5)) {
    throw ValidationError("criticality " + std::to_string(*a.criticality) + " outside 1..5");
  }
  if (a.timestamp <= last_timestamp_) {
    throw ValidationError("timestamp " + std::to_string(a.timestamp) + " does not follow " +
                          std::to_string(last_timestamp_));
  }
}

const report::Recommendation& ReviewState::apply(const Adjudication& a) {
  validate(a);
  auto& rec = *report_.recommendation(a.recommendation_id);
  report::ExpertDecision d{a.expert_id,
                           a.decision == Decision::APPROVE ? Status::APPROVED : Status::REJECTED,
                           a.criticality, a.note, a.timestamp};
  auto it = std::lower_bound(rec.decisions.begin(), rec.decisions.end(), a.expert_id,
                             [](const auto& x, const std::string& e) { return x.expert_id < e; });
  if (it != rec.decisions.end() && it->expert_id == a.expert_id) {
    *it = std::move(d);
  } else {
    rec.decisions.insert(it, std::move(d));
  }
  recorded_at_[{a.recommendation_id, a.expert_id}] = a.recorded_at;

  rec.status = aggregate(rec.decisions);
  rec.decided_by.reset();
  rec.decided_at.reset();
  if (rec.status != Status::PROPOSED) {
    // the most recent decision that agrees with the aggregate
    const report::ExpertDecision* decider = nullptr;
    for (const auto& x : rec.decisions) {
      if (x.decision == rec.status && (!decider || x.timestamp > decider->timestamp)) decider = &x;
    }
    rec.decided_by = decider->expert_id;
    rec.decided_at = recorded_at_[{a.recommendation_id, decider->expert_id}];
  }
  last_timestamp_ = a.timestamp;
  ++applied_;
  return rec;
}

// ---------------------------------------------------------------------------

AdjudicationLog::AdjudicationLog(std::string path) : path_(std::move(path)) {
  const bool existed = std::filesystem::exists(path_);
  fd_ = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd_ < 0) sys_fail("cannot open log", path_);
  if (!existed) {
    // make the new directory entry durable as well
    auto dir = std::filesystem::path(path_).parent_path();
    if (dir.empty()) dir = ".";
    const int dfd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY | O_CLOEXEC);
    if (dfd >= 0) {
      ::fsync(dfd);
      ::close(dfd);
    }
  }
}

AdjudicationLog::~AdjudicationLog() {
  if (fd_ >= 0) ::close(fd_);
}

std::vector<Adjudication> AdjudicationLog::read_all() const { return read_log(path_); }

void AdjudicationLog::append(const Adjudication& a) {
  const auto line = to_json(a).dump() + "\n";
  std::size_t done = 0;
  while (done < line.size()) {
    const auto n = ::write(fd_, line.data() + done, line.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      sys_fail("cannot append to log", path_);
    }
    done += static_cast<std::size_t>(n);
  }
  if (::fsync(fd_) != 0) sys_fail("cannot sync log", path_);
}

std::vector<Adjudication> read_log(const std::string& path) {
  std::vector<Adjudication> out;
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  std::stringstream buf;
  buf << in.rdbuf();
  const auto data = buf.str();
  if (!data.empty() && data.back() != '\n') {
    const auto line_no = static_cast<std::size_t>(std::count(data.begin(), data.end(), '\n')) + 1;
    throw ParseError(path, line_no, "truncated final record");
  }
  std::istringstream lines(data);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(adjudication_from_json(nlohmann::json::parse(line), true));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path, line_no, std::string("malformed record: ") + e.what());
    } catch (const ValidationError& e) {
      throw ParseError(path, line_no, e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

FindingQuery parse_query(const std::optional<std::string>& doc, const std::optional<std::string>& category,
                         const std::optional<std::string>& status,
                         const std::optional<std::string>& min_criticality,
                         const std::optional<std::string>& page,
                         const std::optional<std::string>& page_size) {
  FindingQuery q;
  q.doc = doc;
  if (category) {
    q.category = report::parse_category(*category);
    if (!q.category) throw ValidationError("unknown category '" + *category + "'");
  }
  if (status) {
    q.status = report::parse_status(*status);
    if (!q.status) throw ValidationError("unknown status '" + *status + "'");
  }
  if (min_criticality) {
    const auto v = parse_int(*min_criticality);
    if (!v || *v < 1 || *v > 5) throw ValidationError("min_criticality must be 1..5");
    q.min_criticality = static_cast<int>(*v);
  }
  if (page) {
    const auto v = parse_int(*page);
    if (!v || *v < 1) throw ValidationError("page must be a positive integer");
    q.page = static_cast<std::size_t>(*v);
  }
  if (page_size) {
    const auto v = parse_int(*page_size);
    if (!v || *v < 1 || *v > 1000) throw ValidationError("page_size must be 1..1000");
    q.page_size = static_cast<std::size_t>(*v);
  }
  return q;
}

ReviewService::ReviewService(AnalysisReport report, const std::string& log_path)
    : state_(std::move(report)), log_(log_path) {
  std::size_t n = 0;
  for (const auto& a : log_.read_all()) {
    ++n;
    try {
      state_.apply(a);
    } catch (const Error& e) {
      throw Error("log '" + log_path + "' record " + std::to_string(n) + ": " + e.what());
    }
  }
}

ordered_json ReviewService::list_findings(const FindingQuery& q) const {
  std::shared_lock lock(mutex_);
  const auto& r = state_.report();
  std::vector<const report::Finding*> hits;
  if (!q.doc || *q.doc == r.doc_id) {
    for (const auto& f : r.findings) {
      if (q.category && f.category != *q.category) continue;
      if (q.min_criticality && f.criticality < *q.min_criticality) continue;
      if (q.status && std::none_of(f.recommendations.begin(), f.recommendations.end(),
                                   [&](const auto& rec) { return rec.status == *q.status; })) {
        continue;
      }
      hits.push_back(&f);
    }
  }
  ordered_json out;
  out["doc_id"] = r.doc_id;
  out["total"] = hits.size();
  out["page"] = q.page;
  out["page_size"] = q.page_size;
  out["findings"] = ordered_json::array();
  const auto first = (q.page - 1) * q.page_size;
  for (auto i = first; i < hits.size() && i < first + q.page_size; ++i) {
    out["findings"].push_back(report::to_json(*hits[i]));
  }
  return out;
}

ordered_json ReviewService::get_finding(const std::string& id) const {
  std::shared_lock lock(mutex_);
  const auto* f = state_.report().finding(id);
  if (!f) throw NotFoundError("unknown finding '" + id + "'");
  return report::to_json(*f);
}

ordered_json ReviewService::post_decision(Adjudication a) {
  std::unique_lock lock(mutex_);
  a.timestamp = state_.last_timestamp() + 1;
  a.recorded_at = now_utc();
  state_.validate(a);
  log_.append(a);
  const auto& rec = state_.apply(a);
  ordered_json out;
  out["recommendation"] = report::to_json(rec);
  out["status"] = report::to_string(rec.status);
  out["timestamp"] = a.timestamp;
  return out;
}

ordered_json ReviewService::health() const {
  std::shared_lock lock(mutex_);
  std::size_t recs = 0;
  for (const auto& f : state_.report().findings) recs += f.recommendations.size();
  ordered_json out;
  out["status"] = "ok";
  out["doc_id"] = state_.report().doc_id;
  out["findings"] = state_.report().findings.size();
  out["recommendations"] = recs;
  out["decisions"] = state_.applied();
  return out;
}

AnalysisReport ReviewService::snapshot() const {
  std::shared_lock lock(mutex_);
  return state_.report();
}

// ---------------------------------------------------------------------------

Overlays apply_feedback(const AnalysisReport& report, const std::vector<Adjudication>& log,
                        const knowledge::Ontology& base) {
  ReviewState state(report);
  for (const auto& a : log) state.apply(a);

  Overlays out;
  for (const auto& f : state.report().findings) {
    for (const auto& rec : f.recommendations) {
      if (rec.status == Status::REJECTED && report::lexicon_driven(f.subtype)) {
        out.suppressions.insert({report.doc_id, f.lemma});
      }
      if (rec.status == Status::APPROVED && f.subtype == report::Subtype::UNKNOWN_TERM) {
        std::string id = f.lemma;
        std::replace(id.begin(), id.end(), ' ', '-');
        if (!knowledge::concept_lookup(base, f.lemma).empty() || base.find(id) ||
            out.ontology.find(id) || !out.ontology.lookup(f.lemma).empty()) {
          continue;
        }
        out.ontology.add_concept({id, f.lemma, {}});
      }
    }
  }
  return out;
}

}  // namespace cotir::review
