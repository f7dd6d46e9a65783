#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "cotir/detector.hpp"
#include "cotir/report.hpp"

namespace cotir::config {

enum class OutputFormat { json, text, html };

OutputFormat parse_format(std::string_view name);

struct RunConfig {
  std::string lexicons;  // directory
  std::string ontology;
  std::string cskb;
  int threshold = 1;
  int max_recommendations = 3;
  OutputFormat format = OutputFormat::json;
  std::map<report::Subtype, int> rubric;
  // Feedback overlays; empty when unused.
  std::string suppressions;
  std::string ontology_overlay;
};

// Shipped knowledge under the data directory the binary was built with.
RunConfig defaults();
std::string data_dir();

// Applies "key = value" lines on top of `cfg`. Relative paths are taken
// relative to `base_dir`. Keys: lexicons, ontology, cskb, threshold,
// max_recommendations, format, rubric.<SUBTYPE>, suppressions,
// ontology_overlay. Throws ParseError on unknown keys or bad values.
void apply(RunConfig& cfg, std::istream& in, const std::string& base_dir,
           const std::string& source_name = "<config>");
RunConfig load_file(const std::string& path);

// Threshold and rubric in 1..5, max_recommendations >= 1, every path
// present. Throws ConfigError naming the first problem.
void validate(const RunConfig& cfg);

// Loads and merges every artifact the config names and stamps the digest
// from the file bytes.
std::unique_ptr<detector::Knowledge> load_knowledge(const RunConfig& cfg);

detector::DetectorConfig detector_config(const RunConfig& cfg);

}  // namespace cotir::config
