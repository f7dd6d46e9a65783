#include "cotir/knowledge.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <memory>
#include <istream>
#include <ostream>
#include <sstream>

namespace cotir::knowledge {

namespace {

struct Field {
  std::string value;
  bool quoted = false;
};

// Splits a line on whitespace; "double quoted" fields may contain spaces
// and the escapes \" and \\.
std::vector<Field> split_fields(std::string_view line, const std::string& source,
                                std::size_t line_no) {
  std::vector<Field> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    Field f;
    if (line[i] == '"') {
      f.quoted = true;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        const char c = line[i++];
        if (c == '\\' && i < line.size()) {
          f.value.push_back(line[i++]);
        } else if (c == '"') {
          closed = true;
          break;
        } else {
          f.value.push_back(c);
        }
      }
      if (!closed) throw ParseError(source, line_no, "unterminated quoted string");
    } else {
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') f.value.push_back(line[i++]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

bool valid_id(std::string_view id) {
  return !id.empty() && std::none_of(id.begin(), id.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '"' || c == '#';
  });
}

std::string_view axiom_keyword(AxiomKind k) {
  return k == AxiomKind::SUBSUMPTION ? "subsumes" : "disjoint";
}

bool getline_clean(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

bool skip_line(std::string_view line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == '#';
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return cols;
}

bool is_lowercase(std::string_view s) {
  return std::none_of(s.begin(), s.end(),
                      [](char c) { return std::isupper(static_cast<unsigned char>(c)); });
}

std::string format_confidence(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, res.ptr);
  // keep the shipped two-decimal look where it is exact
  char fixed[32];
  auto f = std::to_chars(fixed, fixed + sizeof(fixed), v, std::chars_format::fixed, 2);
  std::string two(fixed, f.ptr);
  double back = 0;
  std::from_chars(two.data(), two.data() + two.size(), back);
  return back == v ? two : s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ontology

SubsumptionCycleError::SubsumptionCycleError(std::vector<std::string> cycle)
    : Error([&] {
        std::string msg = "subsumption cycle: ";
        for (std::size_t i = 0; i < cycle.size(); ++i) msg += (i ? " -> " : "") + cycle[i];
        return msg;
      }()),
      cycle_(std::move(cycle)) {}

void Ontology::add_concept(Concept c) {
  if (!valid_id(c.id)) throw Error("invalid concept id '" + c.id + "'");
  if (c.label.empty()) throw Error("concept '" + c.id + "' has an empty label");
  if (concepts_.count(c.id)) throw Error("duplicate concept id '" + c.id + "'");
  const auto key = nlp::to_lower(c.label);
  if (auto it = label_index_.find(key); it != label_index_.end()) {
    throw Error("concept '" + c.id + "' reuses the label of '" + it->second + "'");
  }
  label_index_.emplace(key, c.id);
  auto id = c.id;
  concepts_.emplace(std::move(id), std::move(c));
}

void Ontology::add_relation(Relation r) {
  if (r.name.empty()) throw Error("relation with empty name");
  for (const auto* end : {&r.source, &r.target}) {
    if (!concepts_.count(*end)) {
      throw Error("relation '" + r.name + "' references undeclared concept '" + *end + "'");
    }
  }
  relations_.insert(std::move(r));
}

void Ontology::add_axiom(Axiom a) {
  for (const auto* op : {&a.first, &a.second}) {
    if (!concepts_.count(*op)) {
      throw Error(std::string("axiom '") + std::string(axiom_keyword(a.kind)) +
                  "' references undeclared concept '" + *op + "'");
    }
  }
  axioms_.insert(std::move(a));
}

const Concept* Ontology::find(std::string_view id) const {
  auto it = concepts_.find(std::string(id));
  return it == concepts_.end() ? nullptr : &it->second;
}

std::vector<const Concept*> Ontology::lookup(std::string_view term) const {
  std::vector<const Concept*> out;
  const auto key = nlp::to_lower(term);
  if (key.empty()) return out;
  if (auto it = label_index_.find(key); it != label_index_.end()) {
    out.push_back(&concepts_.at(it->second));
  }
  for (const auto& [id, c] : concepts_) {
    if (!out.empty() && out.front() == &c) continue;
    for (const auto& s : c.synonyms) {
      if (nlp::to_lower(s) == key) {
        out.push_back(&c);
        break;
      }
    }
  }
  return out;
}

std::vector<Relation> Ontology::outgoing(std::string_view id, std::string_view name) const {
  std::vector<Relation> out;
  for (const auto& r : relations_) {
    if (r.source == id && r.name == name) out.push_back(r);
  }
  return out;
}

void Ontology::merge(const Ontology& overlay) {
  for (const auto& [id, c] : overlay.concepts_) {
    if (concepts_.count(id) || label_index_.count(nlp::to_lower(c.label))) continue;
    add_concept(c);
  }
  for (const auto& r : overlay.relations_) {
    if (concepts_.count(r.source) && concepts_.count(r.target)) relations_.insert(r);
  }
  for (const auto& a : overlay.axioms_) {
    if (concepts_.count(a.first) && concepts_.count(a.second)) axioms_.insert(a);
  }
}

std::vector<std::string> Ontology::find_subsumption_cycle() const {
  std::map<std::string, std::vector<std::string>> edges;
  for (const auto& a : axioms_) {
    if (a.kind == AxiomKind::SUBSUMPTION) edges[a.first].push_back(a.second);
  }
  enum class Mark { none, active, done };
  std::map<std::string, Mark> mark;
  std::vector<std::string> stack;
  std::vector<std::string> cycle;

  std::function<bool(const std::string&)> visit = [&](const std::string& v) {
    mark[v] = Mark::active;
    stack.push_back(v);
    for (const auto& w : edges[v]) {
      if (mark[w] == Mark::active) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        cycle.push_back(w);
        return true;
      }
      if (mark[w] == Mark::none && visit(w)) return true;
    }
    stack.pop_back();
    mark[v] = Mark::done;
    return false;
  };
  for (const auto& [v, _] : edges) {
    if (mark[v] == Mark::none && visit(v)) break;
  }
  return cycle;
}

Ontology load_ontology(std::istream& in, const std::string& source_name) {
  Ontology onto;
  std::string line;
  std::size_t line_no = 0;
  while (getline_clean(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    const auto f = split_fields(line, source_name, line_no);
    const auto& kw = f[0].value;
    auto fail = [&](const std::string& what) { throw ParseError(source_name, line_no, what); };
    if (f[0].quoted) fail("expected a keyword");

    if (kw == "concept") {
      if (f.size() < 3 || f[1].quoted || !f[2].quoted) fail("expected: concept <id> \"<label>\"");
      Concept c{f[1].value, f[2].value, {}};
      std::size_t i = 3;
      if (i < f.size()) {
        if (f[i].quoted || f[i].value != "syn") fail("expected 'syn' after the label");
        if (++i == f.size()) fail("'syn' needs at least one quoted synonym");
        for (; i < f.size(); ++i) {
          if (!f[i].quoted) fail("synonyms must be quoted");
          c.synonyms.push_back(f[i].value);
        }
      }
      try {
        onto.add_concept(std::move(c));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        fail(e.what());
      }
    } else if (kw == "rel") {
      if (f.size() != 4 || f[1].quoted || f[2].quoted || f[3].quoted) {
        fail("expected: rel <name> <source-id> <target-id>");
      }
      for (const auto* end : {&f[2].value, &f[3].value}) {
        if (!onto.find(*end)) throw DanglingEndpointError(source_name, line_no, f[1].value, *end);
      }
      onto.add_relation({f[1].value, f[2].value, f[3].value});
    } else if (kw == "axiom") {
      if (f.size() != 4 || f[1].quoted || f[2].quoted || f[3].quoted) {
        fail("expected: axiom subsumes|disjoint <id> <id>");
      }
      AxiomKind kind;
      if (f[1].value == "subsumes") {
        kind = AxiomKind::SUBSUMPTION;
      } else if (f[1].value == "disjoint") {
        kind = AxiomKind::DISJOINT;
      } else {
        fail("unknown axiom kind '" + f[1].value + "'");
      }
      for (const auto* op : {&f[2].value, &f[3].value}) {
        if (!onto.find(*op)) {
          throw DanglingEndpointError(source_name, line_no, "axiom " + f[1].value, *op);
        }
      }
      onto.add_axiom({kind, f[2].value, f[3].value});
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (auto cycle = onto.find_subsumption_cycle(); !cycle.empty()) {
    throw SubsumptionCycleError(std::move(cycle));
  }
  return onto;
}

Ontology load_ontology_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open ontology: " + path);
  return load_ontology(in, path);
}

void write_ontology(std::ostream& out, const Ontology& onto) {
  out << "# concepts: " << onto.concepts().size() << " relations: " << onto.relations().size()
      << " axioms: " << onto.axioms().size() << '\n';
  for (const auto& [id, c] : onto.concepts()) {
    out << "concept " << id << ' ' << quote(c.label);
    if (!c.synonyms.empty()) {
      out << " syn";
      for (const auto& s : c.synonyms) out << ' ' << quote(s);
    }
    out << '\n';
  }
  for (const auto& r : onto.relations()) {
    out << "rel " << r.name << ' ' << r.source << ' ' << r.target << '\n';
  }
  for (const auto& a : onto.axioms()) {
    out << "axiom " << axiom_keyword(a.kind) << ' ' << a.first << ' ' << a.second << '\n';
  }
}

std::vector<const Concept*> concept_lookup(const Ontology& onto, std::string_view term) {
  return onto.lookup(term);
}

// ---------------------------------------------------------------------------
// CSKB

void Cskb::add(CskTriple t) {
  auto& slot = by_subject_[t.subject];
  auto [it, inserted] = slot.try_emplace({t.relation, t.object}, t.confidence);
  if (!inserted) it->second = std::max(it->second, t.confidence);
}

std::vector<CskTriple> Cskb::query(std::string_view subject,
                                   std::optional<std::string_view> relation) const {
  std::vector<CskTriple> out;
  auto it = by_subject_.find(std::string(subject));
  if (it == by_subject_.end()) return out;
  for (const auto& [key, conf] : it->second) {
    if (relation && key.first != *relation) continue;
    out.push_back({it->first, key.first, key.second, conf});
  }
  std::stable_sort(out.begin(), out.end(), [](const CskTriple& a, const CskTriple& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    if (a.object != b.object) return a.object < b.object;
    return a.relation < b.relation;
  });
  return out;
}

bool Cskb::contains(const CskTriple& t) const {
  auto it = by_subject_.find(t.subject);
  if (it == by_subject_.end()) return false;
  auto jt = it->second.find({t.relation, t.object});
  return jt != it->second.end() && jt->second == t.confidence;
}

std::size_t Cskb::size() const {
  std::size_t n = 0;
  for (const auto& [_, m] : by_subject_) n += m.size();
  return n;
}

std::size_t Cskb::relation_count() const {
  std::set<std::string> rels;
  for (const auto& [_, m] : by_subject_) {
    for (const auto& [key, __] : m) rels.insert(key.first);
  }
  return rels.size();
}

std::vector<CskTriple> Cskb::all() const {
  std::vector<CskTriple> out;
  for (const auto& [s, m] : by_subject_) {
    for (const auto& [key, conf] : m) out.push_back({s, key.first, key.second, conf});
  }
  return out;
}

Cskb load_cskb(std::istream& in, const std::string& source_name) {
  Cskb kb;
  std::string line;
  std::size_t line_no = 0;
  while (getline_clean(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    const auto cols = split_tabs(line);
    auto fail = [&](const std::string& what) { throw ParseError(source_name, line_no, what); };
    if (cols.size() != 4) fail("expected 4 tab-separated columns, got " + std::to_string(cols.size()));
    for (std::size_t i = 0; i < 3; ++i) {
      if (cols[i].empty()) fail("empty field in column " + std::to_string(i + 1));
      if (cols[i].find(' ') != std::string_view::npos && i == 1) fail("relation contains a space");
    }
    if (!is_lowercase(cols[0]) || !is_lowercase(cols[2])) fail("subject and object must be lowercase");
    double conf = 0;
    const auto c = cols[3];
    auto res = std::from_chars(c.data(), c.data() + c.size(), conf);
    if (res.ec != std::errc() || res.ptr != c.data() + c.size()) {
      fail("confidence '" + std::string(c) + "' is not a number");
    }
    if (!(conf >= 0.0 && conf <= 1.0)) fail("confidence " + std::string(c) + " outside [0,1]");
    kb.add({std::string(cols[0]), std::string(cols[1]), std::string(cols[2]), conf});
  }
  return kb;
}

Cskb load_cskb_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open cskb: " + path);
  return load_cskb(in, path);
}

void write_cskb(std::ostream& out, const Cskb& kb) {
  out << "# triples: " << kb.size() << " subjects: " << kb.subject_count()
      << " relations: " << kb.relation_count() << '\n';
  for (const auto& t : kb.all()) {
    out << t.subject << '\t' << t.relation << '\t' << t.object << '\t'
        << format_confidence(t.confidence) << '\n';
  }
}

std::vector<CskTriple> query_cskb(const Cskb& kb, std::string_view subject,
                                  std::optional<std::string_view> relation) {
  return kb.query(subject, relation);
}

// ---------------------------------------------------------------------------
// Lexicons

void AmbiguityLexicon::add(AmbiguityEntry e) {
  auto lemma = e.lemma;
  entries_.insert_or_assign(std::move(lemma), std::move(e));
}

const AmbiguityEntry* AmbiguityLexicon::find(std::string_view lemma) const {
  auto it = entries_.find(std::string(lemma));
  return it == entries_.end() ? nullptr : &it->second;
}

AmbiguityLexicon load_ambiguity(std::istream& in, const std::string& source_name) {
  AmbiguityLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (getline_clean(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    const auto cols = split_tabs(line);
    auto fail = [&](const std::string& what) { throw ParseError(source_name, line_no, what); };
    if (cols.size() != 4) fail("expected lemma, pos-classes, sense_count, glosses");
    AmbiguityEntry e;
    e.lemma = nlp::to_lower(cols[0]);
    if (e.lemma.empty()) fail("empty lemma");
    std::stringstream classes{std::string(cols[1])};
    std::string cls;
    while (std::getline(classes, cls, ',')) {
      const auto tag = nlp::parse_tag(cls);
      if (!tag || (*tag != nlp::Tag::NOUN && *tag != nlp::Tag::VERB && *tag != nlp::Tag::ADJ)) {
        fail("pos class '" + cls + "' is not NOUN, VERB or ADJ");
      }
      e.pos_classes.push_back(*tag);
    }
    if (e.pos_classes.empty()) fail("no pos classes");
    const auto n = cols[2];
    auto res = std::from_chars(n.data(), n.data() + n.size(), e.sense_count);
    if (res.ec != std::errc() || res.ptr != n.data() + n.size() || e.sense_count < 1) {
      fail("sense_count must be an integer >= 1");
    }
    std::stringstream glosses{std::string(cols[3])};
    std::string g;
    while (std::getline(glosses, g, '|')) e.glosses.push_back(g);
    if (static_cast<int>(e.glosses.size()) != e.sense_count) {
      fail("sense_count " + std::to_string(e.sense_count) + " but " +
           std::to_string(e.glosses.size()) + " glosses");
    }
    lex.add(std::move(e));
  }
  return lex;
}

int sense_count(const AmbiguityLexicon& lex, std::string_view lemma, nlp::Tag pos) {
  const auto* e = lex.find(lemma);
  if (!e) return 0;
  return std::find(e->pos_classes.begin(), e->pos_classes.end(), pos) != e->pos_classes.end()
             ? e->sense_count
             : 0;
}

void PhraseLexicon::add(std::vector<std::string> phrase) {
  if (phrase.empty() || contains(phrase)) return;
  phrases_.push_back(std::move(phrase));
}

void PhraseLexicon::add_text(std::string_view phrase) {
  std::vector<std::string> words;
  for (const auto& t : nlp::tokenize(phrase)) words.push_back(nlp::to_lower(t.text));
  add(std::move(words));
}

bool PhraseLexicon::contains(const std::vector<std::string>& phrase) const {
  return std::find(phrases_.begin(), phrases_.end(), phrase) != phrases_.end();
}

PhraseLexicon load_phrases(std::istream& in) {
  PhraseLexicon lex;
  std::string line;
  while (getline_clean(in, line)) {
    if (!skip_line(line)) lex.add_text(line);
  }
  return lex;
}

LemmaSet load_lemma_set(std::istream& in) {
  LemmaSet set;
  std::string line;
  while (getline_clean(in, line)) {
    if (skip_line(line)) continue;
    const auto a = line.find_first_not_of(" \t");
    const auto b = line.find_last_not_of(" \t");
    set.insert(nlp::to_lower(std::string_view(line).substr(a, b - a + 1)));
  }
  return set;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Lexicons load_lexicons(const std::string& dir) {
  auto open = [&](const char* name) {
    const auto path = dir + "/" + name;
    auto in = std::make_unique<std::ifstream>(path);
    if (!*in) throw ConfigError("cannot open lexicon file: " + path);
    return std::make_pair(std::move(in), path);
  };
  Lexicons lex;
  {
    auto [in, path] = open("tags.tsv");
    lex.tags = nlp::TagLexicon::load(*in, path);
  }
  {
    auto [in, path] = open("irregular_lemmas.tsv");
    lex.irregular = nlp::Lemmatizer::load_irregular(*in, path);
  }
  {
    auto [in, path] = open("ambiguity.tsv");
    lex.ambiguity = load_ambiguity(*in, path);
  }
  lex.vague_phrases = load_phrases(*open("vague_phrases.txt").first);
  lex.weak_phrases = load_phrases(*open("weak_phrases.txt").first);
  lex.vague_verbs = load_lemma_set(*open("vague_verbs.txt").first);
  lex.stoplist = load_lemma_set(*open("stoplist.txt").first);
  return lex;
}

}  // namespace cotir::knowledge
