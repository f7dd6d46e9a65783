#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cotir/error.hpp"
#include "cotir/nlp.hpp"

namespace cotir::knowledge {

// ---------------------------------------------------------------------------
// Ontology: concepts, labeled binary relations over concepts, axioms.

struct Concept {
  std::string id;
  std::string label;
  std::vector<std::string> synonyms;

  friend bool operator==(const Concept&, const Concept&) = default;
};

struct Relation {
  std::string name;
  std::string source;
  std::string target;

  friend auto operator<=>(const Relation&, const Relation&) = default;
};

enum class AxiomKind { SUBSUMPTION, DISJOINT };

struct Axiom {
  AxiomKind kind = AxiomKind::SUBSUMPTION;
  std::string first;
  std::string second;

  friend auto operator<=>(const Axiom&, const Axiom&) = default;
};

class DanglingEndpointError : public ParseError {
 public:
  DanglingEndpointError(std::string source, std::size_t line, std::string relation,
                        std::string missing)
      : ParseError(std::move(source), line,
                   "relation '" + relation + "' references undeclared concept '" + missing + "'"),
        relation_(std::move(relation)),
        missing_(std::move(missing)) {}

  const std::string& relation() const { return relation_; }
  const std::string& missing() const { return missing_; }

 private:
  std::string relation_;
  std::string missing_;
};

class SubsumptionCycleError : public Error {
 public:
  explicit SubsumptionCycleError(std::vector<std::string> cycle);

  // Concept ids along the cycle; the first id is repeated at the end.
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class Ontology {
 public:
  // Throws ParseError if the id is taken or the label clashes
  // case-insensitively with an existing one.
  void add_concept(Concept c);
  // Endpoints must already be declared.
  void add_relation(Relation r);
  void add_axiom(Axiom a);

  const Concept* find(std::string_view id) const;
  const std::map<std::string, Concept>& concepts() const { return concepts_; }
  const std::set<Relation>& relations() const { return relations_; }
  const std::set<Axiom>& axioms() const { return axioms_; }

  // Concepts whose label equals the term (case-insensitive), then concepts
  // with a matching synonym, each group in id order. No duplicates.
  std::vector<const Concept*> lookup(std::string_view term) const;

  // Relations with the given name whose source is `id`, in relation order.
  std::vector<Relation> outgoing(std::string_view id, std::string_view name) const;

  // Adds the overlay's concepts, relations and axioms that are not already
  // present. Concepts whose id or label already exists are skipped.
  void merge(const Ontology& overlay);

  // Returns the ids of one subsumption cycle, empty when acyclic.
  std::vector<std::string> find_subsumption_cycle() const;

  friend bool operator==(const Ontology&, const Ontology&) = default;

 private:
  std::map<std::string, Concept> concepts_;
  std::map<std::string, std::string> label_index_;  // lowercase label -> id
  std::set<Relation> relations_;
  std::set<Axiom> axioms_;
};

// Line format:
//   concept <id> "<label>" [syn "<s1>" "<s2>" ...]
//   rel <name> <source-id> <target-id>
//   axiom subsumes|disjoint <id> <id>
// '#' starts a comment line. Concepts must be declared before use.
Ontology load_ontology(std::istream& in, const std::string& source_name = "<ontology>");
Ontology load_ontology_file(const std::string& path);
void write_ontology(std::ostream& out, const Ontology& onto);

std::vector<const Concept*> concept_lookup(const Ontology& onto, std::string_view term);

// ---------------------------------------------------------------------------
// Common-sense knowledge base

struct CskTriple {
  std::string subject;
  std::string relation;
  std::string object;
  double confidence = 0.0;

  friend bool operator==(const CskTriple&, const CskTriple&) = default;
};

class Cskb {
 public:
  // Keeps the higher confidence when (subject, relation, object) repeats.
  void add(CskTriple t);

  // Triples for `subject` (optionally one relation), confidence descending
  // then object ascending, then relation ascending.
  std::vector<CskTriple> query(std::string_view subject,
                               std::optional<std::string_view> relation = std::nullopt) const;

  bool contains(const CskTriple& t) const;
  std::size_t size() const;
  std::size_t subject_count() const { return by_subject_.size(); }
  std::size_t relation_count() const;
  // All triples in (subject, relation, object) order.
  std::vector<CskTriple> all() const;

  friend bool operator==(const Cskb&, const Cskb&) = default;

 private:
  // subject -> (relation, object) -> confidence
  std::map<std::string, std::map<std::pair<std::string, std::string>, double>> by_subject_;
};

// TSV: subject<TAB>relation<TAB>object<TAB>confidence
Cskb load_cskb(std::istream& in, const std::string& source_name = "<cskb>");
Cskb load_cskb_file(const std::string& path);
void write_cskb(std::ostream& out, const Cskb& kb);

std::vector<CskTriple> query_cskb(const Cskb& kb, std::string_view subject,
                                  std::optional<std::string_view> relation = std::nullopt);

// ---------------------------------------------------------------------------
// Lexicons

struct AmbiguityEntry {
  std::string lemma;
  std::vector<nlp::Tag> pos_classes;  // subset of NOUN, VERB, ADJ
  int sense_count = 0;
  std::vector<std::string> glosses;
};

class AmbiguityLexicon {
 public:
  void add(AmbiguityEntry e);
  const AmbiguityEntry* find(std::string_view lemma) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, AmbiguityEntry>& entries() const { return entries_; }

 private:
  std::map<std::string, AmbiguityEntry> entries_;
};

AmbiguityLexicon load_ambiguity(std::istream& in, const std::string& source_name = "<ambiguity>");

// Sense count when the lemma is listed for that part of speech, else 0.
int sense_count(const AmbiguityLexicon& lex, std::string_view lemma, nlp::Tag pos);

// Multiword entries stored as lowercase token sequences.
class PhraseLexicon {
 public:
  void add(std::vector<std::string> phrase);
  void add_text(std::string_view phrase);  // tokenized and lowercased
  const std::vector<std::vector<std::string>>& phrases() const { return phrases_; }
  bool contains(const std::vector<std::string>& phrase) const;
  std::size_t size() const { return phrases_.size(); }

 private:
  std::vector<std::vector<std::string>> phrases_;
};

PhraseLexicon load_phrases(std::istream& in);

using LemmaSet = std::set<std::string>;

LemmaSet load_lemma_set(std::istream& in);

// Everything under the lexicons directory.
struct Lexicons {
  nlp::TagLexicon tags;
  std::unordered_map<std::string, std::string> irregular;
  AmbiguityLexicon ambiguity;
  PhraseLexicon vague_phrases;
  PhraseLexicon weak_phrases;
  LemmaSet vague_verbs;
  LemmaSet stoplist;
};

// Reads tags.tsv, irregular_lemmas.tsv, ambiguity.tsv, vague_phrases.txt,
// weak_phrases.txt, vague_verbs.txt and stoplist.txt from `dir`. Throws
// ConfigError naming the path of a missing file.
Lexicons load_lexicons(const std::string& dir);

// Reads a whole file; ConfigError naming the path when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace cotir::knowledge
