#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "cotir/detector.hpp"
#include "cotir/error.hpp"
#include "cotir/knowledge.hpp"
#include "cotir/report.hpp"

namespace cotir::review {

using report::AnalysisReport;
using report::Status;

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

enum class Decision { APPROVE, REJECT };

std::string_view to_string(Decision d);
std::optional<Decision> parse_decision(std::string_view s);

struct Adjudication {
  std::string recommendation_id;
  std::string expert_id;
  Decision decision = Decision::APPROVE;
  std::optional<int> criticality;
  std::optional<std::string> note;
  std::uint64_t timestamp = 0;  // log sequence number, strictly increasing
  std::string recorded_at;      // wall clock, informational

  friend bool operator==(const Adjudication&, const Adjudication&) = default;
};

nlohmann::ordered_json to_json(const Adjudication& a);

// Parses a POST body or a log line. With `require_timestamp` false the
// timestamp and recorded_at fields are ignored. Throws ValidationError.
Adjudication adjudication_from_json(const nlohmann::json& j, bool require_timestamp);

// APPROVED when some latest decision approves and none rejects, REJECTED
// when any latest decision rejects, else PROPOSED.
Status aggregate(const std::vector<report::ExpertDecision>& latest);

// Report plus the decisions applied so far. Replaying the same sequence of
// adjudications always yields the same state.
class ReviewState {
 public:
  explicit ReviewState(AnalysisReport base);

  // Throws NotFoundError for an unknown recommendation, ValidationError for
  // an empty expert id, a criticality outside 1..5 or a timestamp that does
  // not increase.
  void validate(const Adjudication& a) const;
  const report::Recommendation& apply(const Adjudication& a);

  const AnalysisReport& report() const { return report_; }
  std::uint64_t last_timestamp() const { return last_timestamp_; }
  std::size_t applied() const { return applied_; }

 private:
  AnalysisReport report_;
  // (recommendation, expert) -> recorded_at of the latest decision
  std::map<std::pair<std::string, std::string>, std::string> recorded_at_;
  std::uint64_t last_timestamp_ = 0;
  std::size_t applied_ = 0;
};

// JSON Lines file of adjudication records. Appends are flushed with fsync
// before returning.
class AdjudicationLog {
 public:
  explicit AdjudicationLog(std::string path);
  ~AdjudicationLog();
  AdjudicationLog(const AdjudicationLog&) = delete;
  AdjudicationLog& operator=(const AdjudicationLog&) = delete;

  // Every record in file order. A missing file is an empty log. Throws
  // ParseError on a malformed line or a truncated final record.
  std::vector<Adjudication> read_all() const;
  void append(const Adjudication& a);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  int fd_ = -1;
};

std::vector<Adjudication> read_log(const std::string& path);

// Query parameters of GET /findings. Unset fields do not filter.
struct FindingQuery {
  std::optional<std::string> doc;
  std::optional<report::Category> category;
  std::optional<Status> status;  // matches findings with a recommendation in this status
  std::optional<int> min_criticality;
  std::size_t page = 1;  // 1-based
  std::size_t page_size = 50;
};

// Parses raw query values; throws ValidationError on a bad value.
FindingQuery parse_query(const std::optional<std::string>& doc, const std::optional<std::string>& category,
                         const std::optional<std::string>& status,
                         const std::optional<std::string>& min_criticality,
                         const std::optional<std::string>& page,
                         const std::optional<std::string>& page_size);

class ReviewService {
 public:
  // Replays the log onto the report. Throws on a malformed or dangling log.
  ReviewService(AnalysisReport report, const std::string& log_path);

  nlohmann::ordered_json list_findings(const FindingQuery& q) const;
  nlohmann::ordered_json get_finding(const std::string& id) const;  // throws NotFoundError
  // Validates, appends durably, then applies. Timestamp and recorded_at
  // of the input are replaced.
  nlohmann::ordered_json post_decision(Adjudication a);
  nlohmann::ordered_json health() const;
  AnalysisReport snapshot() const;

 private:
  mutable std::shared_mutex mutex_;
  ReviewState state_;
  AdjudicationLog log_;
};

// HTTP front end: GET /findings, GET /findings/{id}, POST /decisions,
// GET /export, GET /health. When `static_dir` is non-empty it is mounted
// at /ui.
class HttpServer {
 public:
  explicit HttpServer(ReviewService& service, const std::string& static_dir = {});
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws Error when the
  // address cannot be bound.
  int bind(const std::string& host, int port);
  // Blocks until stop() is called.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct Overlays {
  detector::Suppressions suppressions;
  knowledge::Ontology ontology;
};

// Rejected lexicon-driven recommendations suppress (doc, lemma); approved
// UNKNOWN_TERM recommendations add a concept stub for the term unless the
// base ontology already knows it.
Overlays apply_feedback(const AnalysisReport& report, const std::vector<Adjudication>& log,
                        const knowledge::Ontology& base);

}  // namespace cotir::review
