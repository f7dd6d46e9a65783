#include "cotir/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace cotir::eval {

namespace {

// One CSV record; double quotes group fields and "" escapes a quote.
std::vector<std::string> split_csv(std::string_view line, bool& ok) {
  std::vector<std::string> out(1);
  bool quoted = false;
  ok = true;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back().push_back(c);
    }
  }
  ok = !quoted;
  return out;
}

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

std::optional<double> mean(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  double sum = 0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

std::string fmt2(std::optional<double> v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", *v);
  return buf;
}

nlohmann::ordered_json opt_json(std::optional<double> v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

bool AnnotationSet::implicit(const std::string& requirement_id) const {
  auto it = marks.find(requirement_id);
  return it != marks.end() && !it->second.categories.empty();
}

AnnotationSet load_annotations(std::istream& in, const corpus::RequirementDoc* doc,
                               const std::string& source_name) {
  AnnotationSet set;
  if (doc) set.doc_id = doc->doc_id;
  std::string line;
  std::size_t row = 0;
  bool first_row = true;
  bool first_data = true;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fail = [&](const std::string& what) { throw ParseError(source_name, row, what); };
    bool ok = true;
    auto cols = split_csv(line, ok);
    if (!ok) fail("unterminated quoted field");
    for (auto& c : cols) c = trim(c);
    if (first_row && cols[0] == "expert_id") {
      first_row = false;
      continue;
    }
    first_row = false;
    if (cols.size() < 3 || cols.size() > 5) fail("expected 3 to 5 columns, got " + std::to_string(cols.size()));
    cols.resize(5);
    const auto& expert = cols[0];
    const auto& doc_id = cols[1];
    const auto& req_id = cols[2];
    if (expert.empty() || doc_id.empty() || req_id.empty()) fail("empty expert, document or requirement id");
    if (first_data) {
      set.expert_id = expert;
      if (set.doc_id.empty()) set.doc_id = doc_id;
    }
    if (expert != set.expert_id) fail("expert '" + expert + "' differs from '" + set.expert_id + "'");
    if (doc_id != set.doc_id) fail("document '" + doc_id + "' differs from '" + set.doc_id + "'");
    first_data = false;
    if (doc && !doc->find(req_id)) fail("unknown requirement '" + req_id + "'");
    if (set.marks.count(req_id)) fail("requirement '" + req_id + "' annotated twice");

    Marks m;
    for (const auto& c : split_list(cols[3])) {
      const auto cat = report::parse_category(c);
      if (!cat) fail("unknown category '" + c + "'");
      m.categories.insert(*cat);
    }
    for (const auto& item : split_list(cols[4])) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) fail("criticality '" + item + "' is not CAT=value");
      const auto cat = report::parse_category(trim(item.substr(0, eq)));
      if (!cat) fail("unknown category in '" + item + "'");
      if (!m.categories.count(*cat)) fail("criticality for unmarked category in '" + item + "'");
      const auto v = trim(item.substr(eq + 1));
      int n = 0;
      auto res = std::from_chars(v.data(), v.data() + v.size(), n);
      if (res.ec != std::errc() || res.ptr != v.data() + v.size() || n < 1 || n > 5) {
        fail("criticality '" + v + "' outside 1..5");
      }
      m.criticality[*cat] = n;
    }
    set.marks.emplace(req_id, std::move(m));
  }
  return set;
}

void write_annotations(std::ostream& out, const AnnotationSet& a) {
  out << "expert_id,doc_id,requirement_id,categories,criticalities\n";
  for (const auto& [req, m] : a.marks) {
    std::string cats;
    std::string crit;
    for (auto c : m.categories) cats += (cats.empty() ? "" : ";") + std::string(report::to_string(c));
    for (auto [c, v] : m.criticality) {
      crit += (crit.empty() ? "" : ";") + std::string(report::to_string(c)) + "=" + std::to_string(v);
    }
    out << csv_quote(a.expert_id) << ',' << csv_quote(a.doc_id) << ',' << csv_quote(req) << ','
        << csv_quote(cats) << ',' << csv_quote(crit) << '\n';
  }
}

std::set<std::string> tool_implicit(const report::AnalysisReport& r, int threshold) {
  std::set<std::string> out;
  for (const auto& f : r.findings) {
    if (f.criticality >= threshold) out.insert(f.requirement_id);
  }
  return out;
}

ConfusionCounts confusion(const report::AnalysisReport& tool_report, const AnnotationSet& annotations,
                          const corpus::RequirementDoc& doc, int threshold) {
  if (tool_report.doc_id != doc.doc_id) {
    throw Error("report is for document '" + tool_report.doc_id + "', expected '" + doc.doc_id + "'");
  }
  if (!annotations.doc_id.empty() && annotations.doc_id != doc.doc_id) {
    throw Error("annotations are for document '" + annotations.doc_id + "', expected '" + doc.doc_id +
                "'");
  }
  for (const auto& [id, _] : annotations.marks) {
    if (!doc.find(id)) throw Error("annotated requirement '" + id + "' is not in the document");
  }
  const auto flagged = tool_implicit(tool_report, threshold);
  ConfusionCounts c;
  for (const auto& r : doc.requirements) {
    const bool tool = flagged.count(r.id) > 0;
    const bool expert = annotations.implicit(r.id);
    if (tool && expert) {
      ++c.tp;
    } else if (!tool && !expert) {
      ++c.tn;
    } else if (tool) {
      ++c.fp;
    } else {
      ++c.fn;
    }
  }
  return c;
}

double f_measure(double p, double r) { return p + r == 0 ? 0.0 : 2 * p * r / (p + r); }

MetricsCell metrics(const ConfusionCounts& c) {
  MetricsCell m;
  if (c.tp + c.fp > 0) m.precision = 100.0 * static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  if (c.tp + c.fn > 0) m.recall = 100.0 * static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  if (m.precision && m.recall) m.f = f_measure(*m.precision, *m.recall);
  return m;
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::precision:
      return "precision";
    case Metric::recall:
      return "recall";
    case Metric::f:
      return "f";
  }
  return "?";
}

std::optional<double> value(const MetricsCell& c, Metric m) {
  switch (m) {
    case Metric::precision:
      return c.precision;
    case Metric::recall:
      return c.recall;
    case Metric::f:
      return c.f;
  }
  return std::nullopt;
}

void MetricsTable::set(const std::string& doc, const std::string& expert, MetricsCell cell) {
  if (std::find(docs.begin(), docs.end(), doc) == docs.end()) docs.push_back(doc);
  if (std::find(experts.begin(), experts.end(), expert) == experts.end()) experts.push_back(expert);
  rows[doc][expert] = cell;
}

MetricsTable aggregate(MetricsTable t) {
  t.row_averages.clear();
  t.grand_averages.clear();
  for (auto m : kMetrics) {
    std::vector<double> row_means;
    for (const auto& doc : t.docs) {
      std::vector<double> vals;
      for (const auto& expert : t.experts) {
        auto dit = t.rows.find(doc);
        if (dit == t.rows.end()) continue;
        auto eit = dit->second.find(expert);
        if (eit == dit->second.end()) continue;
        if (auto v = value(eit->second, m)) vals.push_back(*v);
      }
      const auto avg = mean(vals);
      t.row_averages[{m, doc}] = avg;
      if (avg) row_means.push_back(*avg);
    }
    t.grand_averages[m] = mean(row_means);
  }
  return t;
}

void write_csv(std::ostream& out, const MetricsTable& t) {
  out << "metric,doc";
  for (const auto& e : t.experts) out << ',' << csv_quote(e);
  out << ",average\n";
  for (auto m : kMetrics) {
    for (const auto& doc : t.docs) {
      out << to_string(m) << ',' << csv_quote(doc);
      for (const auto& e : t.experts) {
        std::optional<double> v;
        if (auto dit = t.rows.find(doc); dit != t.rows.end()) {
          if (auto eit = dit->second.find(e); eit != dit->second.end()) v = value(eit->second, m);
        }
        out << ',' << fmt2(v);
      }
      auto it = t.row_averages.find({m, doc});
      out << ',' << fmt2(it == t.row_averages.end() ? std::nullopt : it->second) << '\n';
    }
    out << to_string(m) << ",Average";
    for (std::size_t i = 0; i < t.experts.size(); ++i) out << ',';
    auto it = t.grand_averages.find(m);
    out << ',' << fmt2(it == t.grand_averages.end() ? std::nullopt : it->second) << '\n';
  }
}

nlohmann::ordered_json to_json(const MetricsTable& t) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["experts"] = t.experts;
  j["docs"] = t.docs;
  ordered_json blocks = ordered_json::object();
  for (auto m : kMetrics) {
    ordered_json block;
    ordered_json rows = ordered_json::object();
    for (const auto& doc : t.docs) {
      ordered_json row;
      ordered_json cells = ordered_json::object();
      for (const auto& e : t.experts) {
        std::optional<double> v;
        if (auto dit = t.rows.find(doc); dit != t.rows.end()) {
          if (auto eit = dit->second.find(e); eit != dit->second.end()) v = value(eit->second, m);
        }
        cells[e] = opt_json(v);
      }
      row["cells"] = std::move(cells);
      auto it = t.row_averages.find({m, doc});
      row["average"] = opt_json(it == t.row_averages.end() ? std::nullopt : it->second);
      rows[doc] = std::move(row);
    }
    block["rows"] = std::move(rows);
    auto it = t.grand_averages.find(m);
    block["average"] = opt_json(it == t.grand_averages.end() ? std::nullopt : it->second);
    blocks[std::string(to_string(m))] = std::move(block);
  }
  j["metrics"] = std::move(blocks);
  return j;
}

Table2Data load_table2(std::istream& in, const std::string& source_name) {
  Table2Data d;
  std::string line;
  std::size_t line_no = 0;
  auto metric_of = [](const std::string& s) -> std::optional<Metric> {
    for (auto m : kMetrics) {
      if (to_string(m) == s) return m;
    }
    return std::nullopt;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, '\t')) cols.push_back(c);
    auto fail = [&](const std::string& what) { throw ParseError(source_name, line_no, what); };
    auto num = [&](const std::string& s) {
      double v = 0;
      auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) fail("bad number '" + s + "'");
      return v;
    };
    if (cols[0] == "cell" && cols.size() == 6) {
      d.cells.push_back({cols[1], cols[2], num(cols[3]), num(cols[4]), num(cols[5])});
    } else if (cols[0] == "row" && cols.size() == 4) {
      const auto m = metric_of(cols[1]);
      if (!m) fail("unknown metric '" + cols[1] + "'");
      d.row_expected[{*m, cols[2]}] = num(cols[3]);
    } else if (cols[0] == "grand" && cols.size() == 3) {
      const auto m = metric_of(cols[1]);
      if (!m) fail("unknown metric '" + cols[1] + "'");
      d.grand_expected[*m] = num(cols[2]);
    } else {
      fail("unrecognized line");
    }
  }
  return d;
}

std::vector<Check> verify_table2(const Table2Data& data, double cell_tolerance,
                                 double grand_tolerance) {
  std::vector<Check> out;
  MetricsTable t;
  for (const auto& c : data.cells) {
    MetricsCell cell{c.precision, c.recall, f_measure(c.precision, c.recall)};
    t.set(c.doc, c.expert, cell);
    const double f = *cell.f;
    out.push_back({"F " + c.doc + "/" + c.expert, c.f, f, cell_tolerance,
                   std::abs(f - c.f) <= cell_tolerance});
  }
  t = aggregate(std::move(t));
  for (const auto& [key, expected] : data.row_expected) {
    const auto it = t.row_averages.find(key);
    const double actual = it != t.row_averages.end() && it->second ? *it->second : NAN;
    out.push_back({"row average " + std::string(to_string(key.first)) + " " + key.second, expected,
                   actual, cell_tolerance, std::abs(actual - expected) <= cell_tolerance});
  }
  for (const auto& [m, expected] : data.grand_expected) {
    const auto& avg = t.grand_averages[m];
    const double actual = avg ? *avg : NAN;
    out.push_back({"grand average " + std::string(to_string(m)), expected, actual, grand_tolerance,
                   std::abs(actual - expected) <= grand_tolerance});
  }
  return out;
}

}  // namespace cotir::eval
