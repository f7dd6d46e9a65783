#include "cotir/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cotir::render {

namespace {

std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::vector<nlp::Span> spans_of(const report::AnalysisReport& r, const std::string& req_id) {
  std::vector<nlp::Span> out;
  for (const auto& f : r.findings) {
    if (f.requirement_id == req_id) out.push_back(f.span);
  }
  return out;
}

}  // namespace

std::string mark_text(const std::string& text, const std::vector<nlp::Span>& spans) {
  auto sorted = spans;
  std::sort(sorted.begin(), sorted.end());
  std::vector<nlp::Span> runs;
  for (const auto& s : sorted) {
    if (s.start >= s.end || s.end > text.size()) continue;
    if (!runs.empty()) {
      auto& last = runs.back();
      const bool gap_blank =
          s.start <= last.end ||
          std::all_of(text.begin() + static_cast<long>(last.end),
                      text.begin() + static_cast<long>(s.start), [](char c) { return c == ' '; });
      if (gap_blank) {
        last.end = std::max(last.end, s.end);
        continue;
      }
    }
    runs.push_back(s);
  }
  std::string out;
  std::size_t pos = 0;
  auto copy = [&](std::size_t from, std::size_t to) {
    for (auto i = from; i < to; ++i) {
      if (text[i] == '*') out.push_back('\\');
      out.push_back(text[i]);
    }
  };
  for (const auto& run : runs) {
    copy(pos, run.start);
    out.push_back('*');
    copy(run.start, run.end);
    out.push_back('*');
    pos = run.end;
  }
  copy(pos, text.size());
  return out;
}

std::vector<std::string> marked_lines(const report::AnalysisReport& r) {
  std::vector<std::string> out;
  for (const auto& req : r.requirements) {
    out.push_back(req.id + ": " + mark_text(req.text, spans_of(r, req.id)));
  }
  return out;
}

std::string text_report(const report::AnalysisReport& r) {
  std::ostringstream out;
  out << "Implicit Requirement Report: " << r.doc_id << '\n';
  if (!r.title.empty()) out << "title: " << r.title << '\n';
  out << "config: " << r.config_digest << '\n';
  out << "requirements: " << r.requirements.size() << "  findings: " << r.findings.size() << '\n';
  const auto lines = marked_lines(r);
  for (std::size_t i = 0; i < r.requirements.size(); ++i) {
    const auto& req = r.requirements[i];
    out << '\n' << lines[i] << '\n';
    for (const auto& f : r.findings) {
      if (f.requirement_id != req.id) continue;
      out << "  " << f.id << ' ' << report::to_string(f.category) << '/'
          << report::to_string(f.subtype) << " [" << f.criticality << "] \"" << f.trigger
          << "\": " << f.rationale << '\n';
      for (const auto& rec : f.recommendations) {
        out << "    " << rec.id << ' ' << report::to_string(rec.status) << ": " << rec.candidate_text
            << '\n';
      }
    }
  }
  return out.str();
}

std::string html_report(const report::AnalysisReport& r) {
  std::ostringstream out;
  out << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
      << "<title>Implicit Requirement Report: " << html_escape(r.doc_id) << "</title>\n"
      << "<style>\n"
      << "body { font-family: sans-serif; max-width: 60em; margin: 2em auto; }\n"
      << "mark { padding: 0 2px; font-style: italic; }\n"
      << "mark.cat-A { background: #ffe08a; }\n"
      << "mark.cat-V { background: #b9e3ff; }\n"
      << "mark.cat-IK { background: #ffc2c2; }\n"
      << "mark.cat-O { background: #d6f5c8; }\n"
      << "ul.findings { font-size: 0.85em; color: #444; }\n"
      << "</style>\n</head>\n<body>\n"
      << "<h1>Implicit Requirement Report: " << html_escape(r.doc_id) << "</h1>\n"
      << "<p class=\"digest\">config " << html_escape(r.config_digest) << "</p>\n";

  for (const auto& req : r.requirements) {
    std::vector<const report::Finding*> fs;
    for (const auto& f : r.findings) {
      if (f.requirement_id == req.id) fs.push_back(&f);
    }
    std::set<std::size_t> cuts{0, req.text.size()};
    for (const auto* f : fs) {
      cuts.insert(f->span.start);
      cuts.insert(f->span.end);
    }
    out << "<div class=\"req\" id=\"" << html_escape(req.id) << "\">\n<p><b>" << html_escape(req.id)
        << "</b> ";
    for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
      const auto a = *it;
      const auto b = *std::next(it);
      std::set<std::string> classes;
      std::string title;
      for (const auto* f : fs) {
        if (f->span.start <= a && b <= f->span.end) {
          classes.insert("cat-" + std::string(report::to_string(f->category)));
          if (!title.empty()) title += "\n";
          title += std::string(report::to_string(f->subtype)) + ": " + f->rationale;
        }
      }
      const auto piece = html_escape(std::string_view(req.text).substr(a, b - a));
      if (classes.empty()) {
        out << piece;
        continue;
      }
      std::string cls;
      for (const auto& c : classes) cls += (cls.empty() ? "" : " ") + c;
      out << "<mark class=\"" << cls << "\" title=\"" << html_escape(title) << "\">" << piece
          << "</mark>";
    }
    out << "</p>\n";
    if (!fs.empty()) {
      out << "<ul class=\"findings\">\n";
      for (const auto* f : fs) {
        out << "<li>" << html_escape(f->id) << ' ' << report::to_string(f->category) << '/'
            << report::to_string(f->subtype) << " [" << f->criticality << "] &ldquo;"
            << html_escape(f->trigger) << "&rdquo;<ul>\n";
        for (const auto& rec : f->recommendations) {
          out << "<li>" << html_escape(rec.id) << ' ' << report::to_string(rec.status) << ": "
              << html_escape(rec.candidate_text) << "</li>\n";
        }
        out << "</ul></li>\n";
      }
      out << "</ul>\n";
    }
    out << "</div>\n";
  }
  out << "</body>\n</html>\n";
  return out.str();
}

}  // namespace cotir::render
