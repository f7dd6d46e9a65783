#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cotir/corpus.hpp"
#include "cotir/report.hpp"

namespace cotir::eval {

using report::Category;

struct Marks {
  std::set<Category> categories;
  std::map<Category, int> criticality;  // keys within categories, values 1..5

  friend bool operator==(const Marks&, const Marks&) = default;
};

// One expert's judgments on one document. Requirements without an entry
// are judged not implicit.
struct AnnotationSet {
  std::string expert_id;
  std::string doc_id;
  std::map<std::string, Marks> marks;  // requirement id -> marks

  bool implicit(const std::string& requirement_id) const;
};

// CSV columns: expert_id, doc_id, requirement_id, categories ("A;V"),
// criticalities ("A=3;V=2"). An optional header row starting with
// "expert_id" is skipped. Every row must name the same expert and
// document. When `doc` is given, requirement ids must resolve in it and
// its doc_id must match. Errors carry the row number.
AnnotationSet load_annotations(std::istream& in, const corpus::RequirementDoc* doc = nullptr,
                               const std::string& source_name = "<annotations>");
void write_annotations(std::ostream& out, const AnnotationSet& a);

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + tn + fp + fn; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

// Requirement ids the tool judges implicit: at least one finding with
// criticality >= threshold.
std::set<std::string> tool_implicit(const report::AnalysisReport& r, int threshold);

// Throws cotir::Error when the report or the annotations belong to another
// document.
ConfusionCounts confusion(const report::AnalysisReport& tool_report, const AnnotationSet& annotations,
                          const corpus::RequirementDoc& doc, int threshold = 1);

// Percentages; nullopt where the denominator is zero.
struct MetricsCell {
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f;

  friend bool operator==(const MetricsCell&, const MetricsCell&) = default;
};

// Harmonic mean 2PR/(P+R); 0 when both are 0.
double f_measure(double p, double r);

MetricsCell metrics(const ConfusionCounts& c);

enum class Metric { precision, recall, f };
inline constexpr Metric kMetrics[] = {Metric::precision, Metric::recall, Metric::f};
std::string_view to_string(Metric m);
std::optional<double> value(const MetricsCell& c, Metric m);

struct MetricsTable {
  std::vector<std::string> docs;     // row order
  std::vector<std::string> experts;  // column order
  std::map<std::string, std::map<std::string, MetricsCell>> rows;  // doc -> expert -> cell
  std::map<std::pair<Metric, std::string>, std::optional<double>> row_averages;
  std::map<Metric, std::optional<double>> grand_averages;

  void set(const std::string& doc, const std::string& expert, MetricsCell cell);
};

// Fills row averages (mean of defined cells per metric and document) and
// grand averages (mean of the defined row averages per metric). Full
// precision; rounding is left to the writers.
MetricsTable aggregate(MetricsTable table);

// Metric blocks x documents x experts with an Average column and an
// Average row per block. Values printed with 2 decimals, undefined empty.
void write_csv(std::ostream& out, const MetricsTable& t);
nlohmann::ordered_json to_json(const MetricsTable& t);

// Published matrix used to check the arithmetic end to end.
struct Table2Data {
  struct Cell {
    std::string doc;
    std::string expert;
    double precision = 0;
    double recall = 0;
    double f = 0;
  };
  std::vector<Cell> cells;
  std::map<std::pair<Metric, std::string>, double> row_expected;
  std::map<Metric, double> grand_expected;
};

Table2Data load_table2(std::istream& in, const std::string& source_name = "<table2>");

struct Check {
  std::string name;
  double expected = 0;
  double actual = 0;
  double tolerance = 0;
  bool pass = false;
};

// Recomputes every F cell from its P and R, the row averages and the grand
// averages, and compares against the published values.
std::vector<Check> verify_table2(const Table2Data& data, double cell_tolerance = 0.02,
                                 double grand_tolerance = 0.05);

}  // namespace cotir::eval
