#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cotir::corpus {

// One requirement as delimited by the input format. source_line records
// where it started and is not part of equality.
struct Requirement {
  std::string id;
  std::string text;
  std::size_t ordinal = 0;
  std::size_t source_line = 0;

  friend bool operator==(const Requirement& a, const Requirement& b) {
    return a.id == b.id && a.text == b.text && a.ordinal == b.ordinal;
  }
};

struct RequirementDoc {
  std::string doc_id;
  std::string title;
  std::vector<Requirement> requirements;

  const Requirement* find(std::string_view id) const;

  friend bool operator==(const RequirementDoc&, const RequirementDoc&) = default;
};

enum class Format { lines, numbered };

Format parse_format(std::string_view name);

// Maps curly quotes to straight ones, drops control characters, collapses
// whitespace runs and trims. Idempotent.
std::string normalize(std::string_view raw);

bool is_valid_utf8(std::string_view text);

// Reads a requirements document. Lines starting with '#' are comments,
// except the directives "# doc: <id>" and "# title: <text>". In `lines`
// mode every other non-empty line is a requirement named R<ordinal>. In
// `numbered` mode a line starting with an ID token such as "R1.2:" opens a
// requirement and following lines continue it.
//
// Throws ParseError on invalid UTF-8, duplicate IDs, or text before the
// first ID in numbered mode.
RequirementDoc load_requirements(std::istream& source, Format format,
                                 std::string default_doc_id = "doc",
                                 const std::string& source_name = "<input>");

// Writes the `numbered` format; load_requirements(numbered) reads it back
// to an equal document.
void write_numbered(std::ostream& out, const RequirementDoc& doc);

}  // namespace cotir::corpus
