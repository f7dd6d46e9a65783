#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cotir/corpus.hpp"
#include "cotir/detector.hpp"
#include "cotir/nlp.hpp"
#include "cotir/report.hpp"

namespace cotir::recommend {

using report::Finding;
using report::Recommendation;

// Lemma of the head noun of the first noun phrase after the verb at
// `span`, within the same sentence. Empty when the verb has no object.
std::string object_head(const nlp::AnalyzedText& text, nlp::Span span);

// Template-based candidates for one finding, at most max_recommendations
// and at least one. Ids are left empty; all start PROPOSED.
std::vector<Recommendation> recommend(const Finding& finding, const corpus::Requirement& req,
                                      const nlp::AnalyzedText& text,
                                      const detector::Knowledge& knowledge,
                                      int max_recommendations = 3);

}  // namespace cotir::recommend
