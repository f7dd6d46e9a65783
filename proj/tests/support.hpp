#pragma once

#include <string>
#include <vector>

#include "cotir/corpus.hpp"
#include "cotir/detector.hpp"
#include "cotir/report.hpp"

namespace cotir::test {

// Absolute path of a file under the shipped data directory.
std::string data_path(const std::string& rel);
std::string slurp(const std::string& path);

// Shipped lexicons, ontology and CSKB, loaded once per process.
const detector::Knowledge& shipped_knowledge();

corpus::RequirementDoc load_doc(const std::string& path,
                                corpus::Format format = corpus::Format::numbered);
corpus::RequirementDoc doc_from_lines(const std::vector<std::string>& lines,
                                      const std::string& doc_id = "t");

report::AnalysisReport analyze_golden();

// Fresh directory under the system temp dir, removed at process exit.
std::string scratch_dir();

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

// Runs the cotir binary with the given shell-quoted argument string.
CommandResult run_cli(const std::string& args, const std::string& env = {});

}  // namespace cotir::test
