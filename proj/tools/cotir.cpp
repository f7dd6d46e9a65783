// Command-line front end: analyze, evaluate, table2, kb, serve, feedback.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or input error.

#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cotir/config.hpp"
#include "cotir/corpus.hpp"
#include "cotir/detector.hpp"
#include "cotir/eval.hpp"
#include "cotir/knowledge.hpp"
#include "cotir/render.hpp"
#include "cotir/report.hpp"
#include "cotir/review.hpp"

namespace fs = std::filesystem;
using namespace cotir;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInputError = 2;

// Flags shared by the commands that load knowledge. Unset flags leave the
// config file value alone.
struct Overrides {
  std::string config;
  std::string lexicons;
  std::string ontology;
  std::string cskb;
  std::optional<int> threshold;
  std::optional<int> max_recommendations;
  std::string format;
  std::string out;
};

void add_knowledge_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "Config file (default: $COTIR_CONFIG)");
  cmd->add_option("--lexicons", o.lexicons, "Lexicon directory");
  cmd->add_option("--ontology", o.ontology, "Domain ontology file");
  cmd->add_option("--cskb", o.cskb, "Common-sense knowledge base file");
  cmd->add_option("--threshold", o.threshold, "Criticality threshold 1..5");
}

config::RunConfig resolve(const Overrides& o) {
  std::string path = o.config;
  if (path.empty()) {
    if (const char* env = std::getenv("COTIR_CONFIG"); env && *env) path = env;
  }
  auto cfg = path.empty() ? config::defaults() : config::load_file(path);
  if (!o.lexicons.empty()) cfg.lexicons = o.lexicons;
  if (!o.ontology.empty()) cfg.ontology = o.ontology;
  if (!o.cskb.empty()) cfg.cskb = o.cskb;
  if (o.threshold) cfg.threshold = *o.threshold;
  if (o.max_recommendations) cfg.max_recommendations = *o.max_recommendations;
  if (!o.format.empty()) cfg.format = config::parse_format(o.format);
  config::validate(cfg);
  return cfg;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << content;
  if (!out) throw ConfigError("cannot write " + path);
}

corpus::RequirementDoc read_doc(const std::string& path, const std::string& format, const std::string& doc_id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open document: " + path);
  const auto id = doc_id.empty() ? fs::path(path).stem().string() : doc_id;
  return corpus::load_requirements(in, corpus::parse_format(format), id, path);
}

// --- analyze -----------------------------------------------------------------

struct AnalyzeArgs {
  Overrides o;
  std::string doc;
  std::string input_format = "numbered";
  std::string doc_id;
};

int run_analyze(const AnalyzeArgs& a) {
  const auto cfg = resolve(a.o);
  const auto knowledge = config::load_knowledge(cfg);
  const auto doc = read_doc(a.doc, a.input_format, a.doc_id);
  const detector::Analyzer analyzer(*knowledge, config::detector_config(cfg));
  const auto r = analyzer.analyze(doc);
  switch (cfg.format) {
    case config::OutputFormat::json:
      write_output(a.o.out, report::dump(r));
      break;
    case config::OutputFormat::text:
      write_output(a.o.out, render::text_report(r));
      break;
    case config::OutputFormat::html:
      write_output(a.o.out, render::html_report(r));
      break;
  }
  return kOk;
}

// --- evaluate ----------------------------------------------------------------

struct EvaluateArgs {
  Overrides o;
  std::string report;
  std::string doc;
  std::string input_format = "numbered";
  std::string doc_id;
  std::vector<std::string> annotations;
};

int run_evaluate(const EvaluateArgs& a) {
  const auto cfg = resolve(a.o);
  const auto r = report::load_report_file(a.report);
  const auto doc = read_doc(a.doc, a.input_format, a.doc_id.empty() ? r.doc_id : a.doc_id);
  eval::MetricsTable table;
  table.docs.push_back(doc.doc_id);
  for (const auto& path : a.annotations) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open annotations: " + path);
    const auto ann = eval::load_annotations(in, nullptr, path);
    const auto counts = eval::confusion(r, ann, doc, cfg.threshold);
    std::cerr << ann.expert_id << ": tp=" << counts.tp << " fp=" << counts.fp << " fn=" << counts.fn
              << " tn=" << counts.tn << '\n';
    table.set(doc.doc_id, ann.expert_id, eval::metrics(counts));
  }
  table = eval::aggregate(std::move(table));
  std::ostringstream csv;
  eval::write_csv(csv, table);
  if (a.o.out.empty()) {
    std::cout << csv.str();
  } else {
    write_output(a.o.out + ".csv", csv.str());
    write_output(a.o.out + ".json", eval::to_json(table).dump(2) + "\n");
  }
  return kOk;
}

// --- table2 ------------------------------------------------------------------

int run_table2(const std::string& path, const std::string& out) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open table data: " + path);
  const auto data = eval::load_table2(in, path);
  std::ostringstream text;
  bool all = true;
  for (const auto& c : eval::verify_table2(data)) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s %s expected=%.2f actual=%.4f tolerance=%.2f\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.expected, c.actual, c.tolerance);
    text << buf;
    all = all && c.pass;
  }
  write_output(out, text.str());
  return all ? kOk : kInvalid;
}

// --- kb ----------------------------------------------------------------------

enum class KbKind { ontology, cskb, lexicons };

KbKind kb_kind(const std::string& path, const std::string& type) {
  if (type == "ontology") return KbKind::ontology;
  if (type == "cskb") return KbKind::cskb;
  if (type == "lexicons") return KbKind::lexicons;
  if (!type.empty()) throw CLI::ValidationError("--type", "expected ontology, cskb or lexicons");
  if (fs::is_directory(path)) return KbKind::lexicons;
  if (fs::path(path).extension() == ".onto") return KbKind::ontology;
  return KbKind::cskb;
}

int run_kb(const std::string& sub, const std::string& path, const std::string& type) {
  if (!fs::exists(path)) throw ConfigError("no such file: " + path);
  const auto kind = kb_kind(path, type);
  try {
    switch (kind) {
      case KbKind::ontology: {
        const auto o = knowledge::load_ontology_file(path);
        if (sub == "stats") {
          std::cout << "concepts: " << o.concepts().size() << '\n'
                    << "relations: " << o.relations().size() << '\n'
                    << "axioms: " << o.axioms().size() << '\n';
        } else {
          std::cout << "ok: " << path << '\n';
        }
        break;
      }
      case KbKind::cskb: {
        const auto kb = knowledge::load_cskb_file(path);
        if (sub == "stats") {
          std::cout << "triples: " << kb.size() << '\n'
                    << "subjects: " << kb.subject_count() << '\n'
                    << "relations: " << kb.relation_count() << '\n';
        } else {
          std::cout << "ok: " << path << '\n';
        }
        break;
      }
      case KbKind::lexicons: {
        const auto lex = knowledge::load_lexicons(path);
        if (sub == "stats") {
          std::cout << "tags: " << lex.tags.size() << '\n'
                    << "ambiguity: " << lex.ambiguity.size() << '\n'
                    << "vague_phrases: " << lex.vague_phrases.size() << '\n'
                    << "weak_phrases: " << lex.weak_phrases.size() << '\n'
                    << "vague_verbs: " << lex.vague_verbs.size() << '\n'
                    << "stoplist: " << lex.stoplist.size() << '\n';
        } else {
          std::cout << "ok: " << path << '\n';
        }
        break;
      }
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    std::cout << "invalid: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}

// --- serve -------------------------------------------------------------------

review::HttpServer* g_server = nullptr;

extern "C" void on_signal(int) {
  if (g_server) g_server->stop();
}

struct ServeArgs {
  std::string report;
  std::string log;
  std::string bind = "127.0.0.1:8080";
  std::string ui;
};

int run_serve(const ServeArgs& a) {
  auto r = report::load_report_file(a.report);
  review::ReviewService service(std::move(r), a.log);
  review::HttpServer server(service, a.ui);
  const auto colon = a.bind.rfind(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--bind", "expected host:port");
  const auto host = a.bind.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(a.bind.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--bind", "bad port in '" + a.bind + "'");
  }
  const int bound = server.bind(host, port);
  std::cout << "listening on " << host << ':' << bound << std::endl;
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.listen();
  g_server = nullptr;
  return kOk;
}

// --- feedback ----------------------------------------------------------------

struct FeedbackArgs {
  Overrides o;
  std::string report;
  std::string log;
  std::string out_dir;
};

int run_feedback(const FeedbackArgs& a) {
  const auto cfg = resolve(a.o);
  const auto r = report::load_report_file(a.report);
  const auto base = knowledge::load_ontology_file(cfg.ontology);
  const auto overlays = review::apply_feedback(r, review::read_log(a.log), base);
  fs::create_directories(a.out_dir);
  const auto supp = (fs::path(a.out_dir) / "suppressions.tsv").string();
  const auto onto = (fs::path(a.out_dir) / "ontology_overlay.onto").string();
  std::ostringstream s;
  detector::write_suppressions(s, overlays.suppressions);
  write_output(supp, s.str());
  std::ostringstream o;
  knowledge::write_ontology(o, overlays.ontology);
  write_output(onto, o.str());
  std::cout << "suppressions = " << fs::absolute(supp).string() << '\n'
            << "ontology_overlay = " << fs::absolute(onto).string() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Implicit requirement detection toolchain"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze", "Analyze a requirements document");
  c_analyze->add_option("doc", analyze.doc, "Requirements document")->required();
  add_knowledge_flags(c_analyze, analyze.o);
  c_analyze->add_option("--format", analyze.o.format, "json, text or html");
  c_analyze->add_option("--out", analyze.o.out, "Output file (default stdout)");
  c_analyze->add_option("--max-recommendations", analyze.o.max_recommendations);
  c_analyze->add_option("--input-format", analyze.input_format, "numbered or lines");
  c_analyze->add_option("--doc-id", analyze.doc_id, "Document id when the file has no '# doc:' line");

  EvaluateArgs evaluate;
  auto* c_eval = app.add_subcommand("evaluate", "Score a report against expert annotations");
  c_eval->add_option("--report", evaluate.report)->required();
  c_eval->add_option("--doc", evaluate.doc)->required();
  c_eval->add_option("--annotations", evaluate.annotations)->required()->expected(1, -1);
  add_knowledge_flags(c_eval, evaluate.o);
  c_eval->add_option("--out", evaluate.o.out, "Write <out>.csv and <out>.json");
  c_eval->add_option("--input-format", evaluate.input_format);
  c_eval->add_option("--doc-id", evaluate.doc_id);

  std::string table2_path = config::data_dir() + "/table2/table2.tsv";
  std::string table2_out;
  auto* c_table2 = app.add_subcommand("table2", "Verify the published metrics table");
  c_table2->add_option("data", table2_path, "Table data file");
  c_table2->add_option("--out", table2_out);

  std::string kb_sub;
  std::string kb_path;
  std::string kb_type;
  auto* c_kb = app.add_subcommand("kb", "Validate or summarize a knowledge artifact");
  c_kb->add_option("action", kb_sub)->required()->check(CLI::IsMember({"validate", "stats"}));
  c_kb->add_option("path", kb_path)->required();
  c_kb->add_option("--type", kb_type, "ontology, cskb or lexicons (default: by path)");

  ServeArgs serve;
  auto* c_serve = app.add_subcommand("serve", "Run the review service");
  c_serve->add_option("--report", serve.report)->required();
  c_serve->add_option("--log", serve.log)->required();
  c_serve->add_option("--bind", serve.bind, "host:port");
  c_serve->add_option("--ui", serve.ui, "Static asset directory served at /ui");

  FeedbackArgs feedback;
  auto* c_feedback = app.add_subcommand("feedback", "Turn adjudications into knowledge overlays");
  c_feedback->add_option("--report", feedback.report)->required();
  c_feedback->add_option("--log", feedback.log)->required();
  c_feedback->add_option("--out-dir", feedback.out_dir)->required();
  add_knowledge_flags(c_feedback, feedback.o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*c_analyze) return run_analyze(analyze);
    if (*c_eval) return run_evaluate(evaluate);
    if (*c_table2) return run_table2(table2_path, table2_out);
    if (*c_kb) return run_kb(kb_sub, kb_path, kb_type);
    if (*c_serve) return run_serve(serve);
    if (*c_feedback) return run_feedback(feedback);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kInputError;
}
