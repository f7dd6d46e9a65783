// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <httplib.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cotir/eval.hpp"
#include "cotir/knowledge.hpp"
#include "cotir/recommend.hpp"
#include "cotir/render.hpp"
#include "cotir/review.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cotir;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << std::fixed << v;
  return s.str();
}

// ---------------------------------------------------------------------------

Outcome table2() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto cli = test::run_cli("table2 " + test::data_path("table2/table2.tsv"));
  const double elapsed = seconds_since(t0);
  o.require(cli.exit_code == 0 && cli.out.find("FAIL") == std::string::npos, "table2 command reported: " + cli.out);
  o.require(elapsed < 1.0, "table2 took " + fmt(elapsed) + " s");

  std::ifstream in(test::data_path("table2/table2.tsv"));
  const auto data = eval::load_table2(in);
  o.require(data.cells.size() == 24, "expected 24 cells, got " + std::to_string(data.cells.size()));
  o.require(data.row_expected.size() == 9, "expected 9 row averages");
  eval::MetricsTable t;
  std::size_t f_ok = 0;
  for (const auto& c : data.cells) {
    const double f = eval::f_measure(c.precision, c.recall);
    f_ok += std::abs(f - c.f) <= 0.02;
    t.set(c.doc, c.expert, {c.precision, c.recall, f});
  }
  o.require(f_ok == data.cells.size(), std::to_string(data.cells.size() - f_ok) + " F cells off by more than 0.02");
  t = eval::aggregate(t);
  for (const auto& [key, expected] : data.row_expected) {
    const auto got = t.row_averages.at(key);
    o.require(got && std::abs(*got - expected) <= 0.02,
              "row average " + std::string(eval::to_string(key.first)) + "/" + key.second + " off");
  }
  const std::pair<double, double> cells[] = {{eval::f_measure(75, 90), 81.82}};
  for (auto [got, want] : cells) o.require(std::abs(got - want) <= 0.02, "R1/E1 F " + fmt(got));
  auto cell = [&](const std::string& doc, const std::string& e) { return *t.rows.at(doc).at(e).f; };
  o.require(std::abs(cell("R2", "E3") - 44.44) <= 0.02, "R2/E3 F " + fmt(cell("R2", "E3")));
  o.require(std::abs(cell("R3", "E5") - 50.00) <= 0.02, "R3/E5 F " + fmt(cell("R3", "E5")));
  o.require(std::abs(*t.row_averages.at({eval::Metric::precision, "R1"}) - 73.24) <= 0.02, "R1 precision average");
  const double grand[] = {68.22, 73.7, 70.3};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto got = t.grand_averages.at(eval::kMetrics[i]);
    o.require(got && std::abs(*got - grand[i]) <= 0.05,
              "grand " + std::string(eval::to_string(eval::kMetrics[i])) + " " + (got ? fmt(*got) : "undefined"));
  }
  if (o.pass) {
    o.detail = "24 F cells, 9 row averages, grand " + fmt(*t.grand_averages.at(eval::Metric::precision)) + "/" +
               fmt(*t.grand_averages.at(eval::Metric::recall)) + "/" + fmt(*t.grand_averages.at(eval::Metric::f)) +
               ", cli " + fmt(elapsed) + " s";
  }
  return o;
}

Outcome golden_corpus() {
  Outcome o;
  const auto r = test::analyze_golden();
  std::ifstream in(test::data_path("golden/emmon_fig3.golden.txt"));
  std::vector<std::string> golden;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') golden.push_back(line);
  }
  const auto got = render::marked_lines(r);
  o.require(got.size() == golden.size() && golden.size() == 13, "line count differs from golden file");
  for (std::size_t i = 0; i < std::min(got.size(), golden.size()); ++i) {
    o.require(got[i] == golden[i], "mismatch: " + got[i]);
  }
  const auto args = "analyze " + test::data_path("corpus/emmon_fig3.txt") + " --format text";
  const auto a = test::run_cli(args);
  const auto b = test::run_cli(args);
  o.require(a.exit_code == 0 && b.exit_code == 0, "analyze failed: " + a.out);
  o.require(a.out == b.out, "text report differs between runs");
  o.require(a.out == render::text_report(r), "CLI text report differs from library rendering");
  if (o.pass) o.detail = "13 requirements, " + std::to_string(r.findings.size()) + " findings";
  return o;
}

Outcome detector_soundness() {
  Outcome o;
  const auto raw = test::oracle::read_raw_lexicons(test::data_path("lexicons"));
  const detector::Analyzer a(test::shipped_knowledge());
  std::mt19937_64 rng(20240601);
  std::size_t triggers = 0;
  const auto t0 = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    const auto text = test::oracle::random_requirement(rng);
    const auto analyzed = a.process(text);
    std::vector<report::Finding> lexical;
    for (auto& f : a.detect({"R1", text, 1, 1}, "doc", analyzed)) {
      if (report::lexicon_driven(f.subtype)) lexical.push_back(std::move(f));
    }
    const auto got = test::oracle::hits_of(lexical);
    o.require(got.size() == lexical.size(), "duplicate finding in: " + text);
    o.require(got == test::oracle::lexicon_hits(analyzed, raw), "mismatch with brute-force scan in: " + text);
    triggers += got.size();
  }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 10.0, "took " + fmt(elapsed) + " s");
  if (o.pass) o.detail = "1000 requirements, " + std::to_string(triggers) + " triggers, " + fmt(elapsed) + " s";
  return o;
}

Outcome metrics_oracle() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::size_t cases = 0;
  std::size_t defined = 0;
  while (cases < 12000) {
    const auto n = rng() % 13;
    corpus::RequirementDoc doc;
    doc.doc_id = "d";
    report::AnalysisReport r;
    r.doc_id = "d";
    eval::AnnotationSet ann;
    ann.expert_id = "E";
    ann.doc_id = "d";
    const int threshold = 1 + static_cast<int>(rng() % 5);
    std::set<std::size_t> tool;
    std::set<std::size_t> expert;
    for (std::size_t i = 0; i < n; ++i) {
      const auto id = "R" + std::to_string(i + 1);
      doc.requirements.push_back({id, "x", i + 1, 0});
      for (auto k = rng() % 3; k > 0; --k) {
        report::Finding f;
        f.requirement_id = id;
        f.criticality = 1 + static_cast<int>(rng() % 5);
        if (f.criticality >= threshold) tool.insert(i);
        r.findings.push_back(f);
      }
      switch (rng() % 3) {
        case 0:
          ann.marks[id].categories.insert(report::Category::V);
          expert.insert(i);
          break;
        case 1:
          ann.marks[id];  // judged explicit
          break;
        default:
          break;
      }
    }
    r.requirements = doc.requirements;
    const auto c = eval::confusion(r, ann, doc, threshold);
    o.require(c == test::oracle::confusion(n, tool, expert), "confusion mismatch at case " + std::to_string(cases));
    const auto m = eval::metrics(c);
    for (auto metric : eval::kMetrics) {
      if (auto v = eval::value(m, metric)) o.require(*v >= 0 && *v <= 100, "metric outside [0,100]");
    }
    if (m.f) {
      ++defined;
      const double p = *m.precision;
      const double rc = *m.recall;
      o.require(std::min(p, rc) <= *m.f + 1e-9 && *m.f <= (p + rc) / 2 + 1e-9, "F outside harmonic bounds");
    }
    ++cases;
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases, " + std::to_string(defined) + " with defined F";
  return o;
}

Outcome knowledge_round_trips() {
  Outcome o;
  const auto onto = knowledge::load_ontology_file(test::data_path("ontology/emmon.onto"));
  std::stringstream ob;
  knowledge::write_ontology(ob, onto);
  o.require(knowledge::load_ontology(ob) == onto, "ontology round trip differs");
  const auto kb = knowledge::load_cskb_file(test::data_path("cskb/desk.tsv"));
  std::stringstream kbuf;
  knowledge::write_cskb(kbuf, kb);
  o.require(knowledge::load_cskb(kbuf) == kb, "CSKB round trip differs");

  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    knowledge::Ontology r;
    const auto n = 1 + rng() % 10;
    for (std::size_t i = 0; i < n; ++i) r.add_concept({"c" + std::to_string(i), "label " + std::to_string(i), {}});
    for (auto k = rng() % 10; k > 0; --k) {
      r.add_relation({"part-of", "c" + std::to_string(rng() % n), "c" + std::to_string(rng() % n)});
    }
    for (std::size_t i = 1; i < n; ++i) {
      if (rng() % 2) r.add_axiom({knowledge::AxiomKind::SUBSUMPTION, "c" + std::to_string(i - 1), "c" + std::to_string(i)});
    }
    std::stringstream b;
    knowledge::write_ontology(b, r);
    o.require(knowledge::load_ontology(b) == r, "random ontology round trip differs");
  }

  auto rejects = [](const std::string& text, auto tag) {
    std::istringstream in(text);
    try {
      knowledge::load_ontology(in);
    } catch (const decltype(tag)&) {
      return true;
    } catch (...) {
      return false;
    }
    return false;
  };
  o.require(rejects("concept a \"a\"\nconcept b \"b\"\naxiom subsumes a b\naxiom subsumes b a\n",
                    knowledge::SubsumptionCycleError({"a", "b", "a"})),
            "subsumption cycle accepted");
  o.require(rejects("concept a \"a\"\nrel part-of a ghost\n", knowledge::DanglingEndpointError("x", 1, "r", "m")),
            "dangling endpoint accepted");
  if (o.pass) {
    o.detail = std::to_string(onto.concepts().size()) + " concepts, " + std::to_string(kb.size()) +
               " triples, 100 random ontologies";
  }
  return o;
}

Outcome recommendation_integrity() {
  Outcome o;
  const auto& k = test::shipped_knowledge();
  std::vector<corpus::RequirementDoc> docs = {test::load_doc(test::data_path("corpus/emmon_fig3.txt"))};
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    std::vector<std::string> lines;
    for (int j = 0; j < 10; ++j) lines.push_back(test::oracle::random_requirement(rng));
    docs.push_back(test::doc_from_lines(lines, "rand" + std::to_string(i)));
  }
  std::size_t recs = 0;
  std::size_t evidence = 0;
  for (int max = 1; max <= 4; ++max) {
    detector::DetectorConfig cfg;
    cfg.max_recommendations = max;
    const detector::Analyzer a(k, cfg);
    for (const auto& doc : docs) {
      const auto r = a.analyze(doc);
      o.require(r == a.analyze(doc) && report::dump(r) == report::dump(a.analyze(doc)), "nondeterministic output");
      for (const auto& f : r.findings) {
        o.require(!f.recommendations.empty(), "finding " + f.id + " without a candidate");
        o.require(f.recommendations.size() <= static_cast<std::size_t>(max), "too many candidates on " + f.id);
        for (const auto& rec : f.recommendations) {
          ++recs;
          o.require(!rec.candidate_text.empty(), "empty candidate on " + rec.id);
          for (const auto& e : rec.evidence) {
            ++evidence;
            const bool known = std::holds_alternative<knowledge::CskTriple>(e)
                                   ? k.cskb.contains(std::get<knowledge::CskTriple>(e))
                                   : k.ontology.relations().count(std::get<knowledge::Relation>(e)) > 0;
            o.require(known, "evidence not in the knowledge base on " + rec.id);
          }
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(recs) + " recommendations, " + std::to_string(evidence) + " evidence items";
  return o;
}

// ---------------------------------------------------------------------------

struct Child {
  pid_t pid = -1;
  int port = 0;
};

Child spawn_server(const std::string& report, const std::string& log) {
  int fds[2];
  if (pipe(fds) != 0) throw std::runtime_error("pipe failed");
  const pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    dup2(fds[1], STDOUT_FILENO);
    close(fds[0]);
    close(fds[1]);
    execl(COTIR_BIN, COTIR_BIN, "serve", "--report", report.c_str(), "--log", log.c_str(), "--bind",
          "127.0.0.1:0", static_cast<char*>(nullptr));
    _exit(127);
  }
  close(fds[1]);
  std::string line;
  char ch;
  while (read(fds[0], &ch, 1) == 1 && ch != '\n') line.push_back(ch);
  close(fds[0]);
  const auto colon = line.rfind(':');
  if (line.rfind("listening on ", 0) != 0 || colon == std::string::npos) {
    kill(pid, SIGKILL);
    waitpid(pid, nullptr, 0);
    throw std::runtime_error("serve did not start: '" + line + "'");
  }
  return {pid, std::stoi(line.substr(colon + 1))};
}

void kill_hard(const Child& c) {
  kill(c.pid, SIGKILL);
  waitpid(c.pid, nullptr, 0);
}

std::map<std::string, report::Status> statuses(const report::AnalysisReport& r) {
  std::map<std::string, report::Status> out;
  for (const auto& f : r.findings) {
    for (const auto& rec : f.recommendations) out[rec.id] = rec.status;
  }
  return out;
}

Outcome review_persistence() {
  Outcome o;
  const auto base = test::analyze_golden();
  std::vector<std::string> ids;
  for (const auto& f : base.findings) {
    for (const auto& rec : f.recommendations) ids.push_back(rec.id);
  }
  std::mt19937_64 rng(31337);

  // in-process: restart after random sequences
  for (int iter = 0; iter < 100; ++iter) {
    const auto log = test::scratch_dir() + "/log.jsonl";
    std::vector<test::oracle::DecisionEvent> events;
    report::AnalysisReport before;
    {
      review::ReviewService svc(base, log);
      for (auto n = rng() % 30; n > 0; --n) {
        const auto& id = ids[rng() % 8];
        const auto expert = "E" + std::to_string(1 + rng() % 3);
        const bool approve = rng() % 2;
        review::Adjudication a;
        a.recommendation_id = id;
        a.expert_id = expert;
        a.decision = approve ? review::Decision::APPROVE : review::Decision::REJECT;
        if (rng() % 2) a.criticality = 1 + static_cast<int>(rng() % 5);
        svc.post_decision(a);
        events.push_back({id, expert, approve});
      }
      before = svc.snapshot();
    }
    const review::ReviewService again(base, log);
    o.require(again.snapshot() == before, "in-process replay differs");
    o.require(statuses(before) == test::oracle::replay_statuses(ids, events), "statuses differ from oracle");
  }

  // out of process: kill -9 the server between batches
  const auto dir = test::scratch_dir();
  const auto report_path = dir + "/report.json";
  std::ofstream(report_path) << report::dump(base);
  const auto log = dir + "/log.jsonl";
  std::vector<test::oracle::DecisionEvent> events;
  int rounds = 0;
  for (; rounds < 6 && o.pass; ++rounds) {
    const auto child = spawn_server(report_path, log);
    httplib::Client client("127.0.0.1", child.port);
    client.set_connection_timeout(5);
    const auto restored = client.Get("/export");
    o.require(restored && restored->status == 200, "export failed after restart");
    if (!o.pass) {
      kill_hard(child);
      break;
    }
    const auto snapshot = report::report_from_json(nlohmann::json::parse(restored->body));
    o.require(statuses(snapshot) == test::oracle::replay_statuses(ids, events),
              "statuses after restart differ from replayed history (round " + std::to_string(rounds) + ")");
    for (auto n = 1 + rng() % 12; n > 0; --n) {
      const auto& id = ids[rng() % 8];
      const auto expert = "E" + std::to_string(1 + rng() % 3);
      const bool approve = rng() % 2;
      nlohmann::json body = {{"recommendation_id", id}, {"expert_id", expert}, {"decision", approve ? "APPROVE" : "REJECT"}};
      const auto res = client.Post("/decisions", body.dump(), "application/json");
      o.require(res && res->status == 200, "POST /decisions failed");
      events.push_back({id, expert, approve});
    }
    kill_hard(child);
  }
  if (o.pass) {
    o.detail = "100 in-process sequences, " + std::to_string(rounds) + " kill -9 restarts, " +
               std::to_string(events.size()) + " decisions";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table2-reproduction", table2},
      {"golden-corpus", golden_corpus},
      {"detector-soundness-completeness", detector_soundness},
      {"metrics-oracle", metrics_oracle},
      {"knowledge-round-trips", knowledge_round_trips},
      {"recommendation-integrity", recommendation_integrity},
      {"review-persistence", review_persistence},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
