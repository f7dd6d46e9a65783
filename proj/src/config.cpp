#include "cotir/config.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef COTIR_DATA_DIR
#define COTIR_DATA_DIR "data"
#endif

namespace cotir::config {

namespace fs = std::filesystem;

namespace {

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t");
  return std::string(s.substr(a, b - a + 1));
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string resolve(const std::string& base, const std::string& p) {
  if (p.empty() || fs::path(p).is_absolute() || base.empty()) return p;
  return (fs::path(base) / p).lexically_normal().string();
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "text") return OutputFormat::text;
  if (name == "html") return OutputFormat::html;
  throw ConfigError("unknown output format '" + std::string(name) + "' (expected json, text or html)");
}

std::string data_dir() { return COTIR_DATA_DIR; }

RunConfig defaults() {
  RunConfig cfg;
  const auto dir = data_dir();
  cfg.lexicons = dir + "/lexicons";
  cfg.ontology = dir + "/ontology/emmon.onto";
  cfg.cskb = dir + "/cskb/desk.tsv";
  return cfg;
}

void apply(RunConfig& cfg, std::istream& in, const std::string& base_dir,
           const std::string& source_name) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    auto fail = [&](const std::string& what) { throw ParseError(source_name, line_no, what); };
    if (eq == std::string::npos) fail("expected key = value");
    const auto key = trim(std::string_view(t).substr(0, eq));
    const auto value = trim(std::string_view(t).substr(eq + 1));
    auto number = [&]() {
      auto v = to_int(value);
      if (!v) fail("'" + key + "' needs an integer, got '" + value + "'");
      return *v;
    };
    if (key == "lexicons") {
      cfg.lexicons = resolve(base_dir, value);
    } else if (key == "ontology") {
      cfg.ontology = resolve(base_dir, value);
    } else if (key == "cskb") {
      cfg.cskb = resolve(base_dir, value);
    } else if (key == "suppressions") {
      cfg.suppressions = resolve(base_dir, value);
    } else if (key == "ontology_overlay") {
      cfg.ontology_overlay = resolve(base_dir, value);
    } else if (key == "threshold") {
      cfg.threshold = number();
    } else if (key == "max_recommendations") {
      cfg.max_recommendations = number();
    } else if (key == "format") {
      try {
        cfg.format = parse_format(value);
      } catch (const ConfigError& e) {
        fail(e.what());
      }
    } else if (key.starts_with("rubric.")) {
      const auto sub = report::parse_subtype(key.substr(7));
      if (!sub) fail("unknown subtype in '" + key + "'");
      cfg.rubric[*sub] = number();
    } else {
      fail("unknown key '" + key + "'");
    }
  }
}

RunConfig load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  auto cfg = defaults();
  apply(cfg, in, fs::path(path).parent_path().string(), path);
  return cfg;
}

void validate(const RunConfig& cfg) {
  if (cfg.threshold < 1 || cfg.threshold > 5) {
    throw ConfigError("threshold must be in 1..5, got " + std::to_string(cfg.threshold));
  }
  if (cfg.max_recommendations < 1) throw ConfigError("max_recommendations must be at least 1");
  for (const auto& [sub, v] : cfg.rubric) {
    if (v < 1 || v > 5) {
      throw ConfigError("rubric." + std::string(report::to_string(sub)) + " must be in 1..5");
    }
  }
  if (!fs::is_directory(cfg.lexicons)) throw ConfigError("lexicon directory not found: " + cfg.lexicons);
  for (const auto* p : {&cfg.ontology, &cfg.cskb}) {
    if (!fs::is_regular_file(*p)) throw ConfigError("file not found: " + *p);
  }
  for (const auto* p : {&cfg.suppressions, &cfg.ontology_overlay}) {
    if (!p->empty() && !fs::is_regular_file(*p)) throw ConfigError("file not found: " + *p);
  }
}

std::unique_ptr<detector::Knowledge> load_knowledge(const RunConfig& cfg) {
  validate(cfg);
  auto k = std::make_unique<detector::Knowledge>();
  std::uint64_t h = detector::fnv1a64("");
  auto feed = [&](const std::string& path) {
    const auto bytes = knowledge::read_file(path);
    h = detector::fnv1a64(fs::path(path).filename().string(), h);
    h = detector::fnv1a64(bytes, h);
    return bytes;
  };
  k->lex = knowledge::load_lexicons(cfg.lexicons);
  for (const char* name : {"tags.tsv", "irregular_lemmas.tsv", "ambiguity.tsv", "vague_phrases.txt",
                           "weak_phrases.txt", "vague_verbs.txt", "stoplist.txt"}) {
    feed(cfg.lexicons + "/" + name);
  }
  {
    std::istringstream in(feed(cfg.ontology));
    k->ontology = knowledge::load_ontology(in, cfg.ontology);
  }
  {
    std::istringstream in(feed(cfg.cskb));
    k->cskb = knowledge::load_cskb(in, cfg.cskb);
  }
  if (!cfg.ontology_overlay.empty()) {
    std::istringstream in(feed(cfg.ontology_overlay));
    k->ontology.merge(knowledge::load_ontology(in, cfg.ontology_overlay));
  }
  if (!cfg.suppressions.empty()) {
    std::istringstream in(feed(cfg.suppressions));
    k->suppressions = detector::load_suppressions(in, cfg.suppressions);
  }
  k->digest = detector::format_digest(h);
  return k;
}

detector::DetectorConfig detector_config(const RunConfig& cfg) {
  detector::DetectorConfig d;
  d.rubric_overrides = cfg.rubric;
  d.max_recommendations = cfg.max_recommendations;
  return d;
}

}  // namespace cotir::config
