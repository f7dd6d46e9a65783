#include "support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cotir/config.hpp"

namespace fs = std::filesystem;

namespace cotir::test {

std::string data_path(const std::string& rel) { return std::string(COTIR_TEST_DATA) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const detector::Knowledge& shipped_knowledge() {
  static const auto k = config::load_knowledge(config::defaults());
  return *k;
}

corpus::RequirementDoc load_doc(const std::string& path, corpus::Format format) {
  std::ifstream in(path, std::ios::binary);
  return corpus::load_requirements(in, format, fs::path(path).stem().string(), path);
}

corpus::RequirementDoc doc_from_lines(const std::vector<std::string>& lines, const std::string& doc_id) {
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  std::istringstream in(text);
  return corpus::load_requirements(in, corpus::Format::lines, doc_id);
}

report::AnalysisReport analyze_golden() {
  const detector::Analyzer a(shipped_knowledge());
  return a.analyze(load_doc(data_path("corpus/emmon_fig3.txt")));
}

namespace {

struct ScratchRoot {
  fs::path root;
  ScratchRoot() {
    root = fs::temp_directory_path() / ("cotir-test-" + std::to_string(::getpid()));
    fs::create_directories(root);
  }
  ~ScratchRoot() {
    std::error_code ec;
    fs::remove_all(root, ec);
  }
};

}  // namespace

std::string scratch_dir() {
  static ScratchRoot root;
  static std::atomic<int> n{0};
  auto dir = root.root / std::to_string(n++);
  fs::create_directories(dir);
  return dir.string();
}

CommandResult run_cli(const std::string& args, const std::string& env) {
  const std::string cmd = env + (env.empty() ? "" : " ") + COTIR_BIN + std::string(" ") + args + " 2>&1";
  CommandResult r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace cotir::test
