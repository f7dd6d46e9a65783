#pragma once

#include <string>
#include <vector>

#include "cotir/nlp.hpp"
#include "cotir/report.hpp"

namespace cotir::render {

// Requirement text with each run of flagged text wrapped in '*'. Spans
// separated only by whitespace merge into one run; a literal '*' in the
// text is written as "\*".
std::string mark_text(const std::string& text, const std::vector<nlp::Span>& spans);

// One "R<n>: <marked text>" line per requirement, in document order.
std::vector<std::string> marked_lines(const report::AnalysisReport& r);

// Plain-text report: header, then each requirement with its findings and
// recommendations.
std::string text_report(const report::AnalysisReport& r);

// Standalone HTML page; triggers are <mark> elements with a class per
// category and the rationale as tooltip.
std::string html_report(const report::AnalysisReport& r);

}  // namespace cotir::render
