#include "cotir/corpus.hpp"

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "cotir/error.hpp"

namespace cotir::corpus {

namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Length of the UTF-8 sequence starting at s[i], or 0 when malformed.
std::size_t utf8_length(std::string_view s, std::size_t i) {
  const auto c = static_cast<unsigned char>(s[i]);
  std::size_t len = 0;
  std::uint32_t cp = 0;
  if (c < 0x80) return 1;
  if ((c & 0xE0) == 0xC0) {
    len = 2;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    len = 3;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    len = 4;
    cp = c & 0x07;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto cc = static_cast<unsigned char>(s[i + k]);
    if ((cc & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (cc & 0x3F);
  }
  // overlong forms, surrogates, out of range
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
      (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
    return 0;
  }
  return len;
}

std::uint32_t decode(std::string_view s, std::size_t i, std::size_t len) {
  const auto c = static_cast<unsigned char>(s[i]);
  std::uint32_t cp = len == 1 ? c : len == 2 ? (c & 0x1F) : len == 3 ? (c & 0x0F) : (c & 0x07);
  for (std::size_t k = 1; k < len; ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
  return cp;
}

bool is_unicode_space(std::uint32_t cp) {
  return cp == 0x00A0 || cp == 0x2007 || cp == 0x202F || (cp >= 0x2000 && cp <= 0x200A) ||
         cp == 0x2028 || cp == 0x2029 || cp == 0x3000 || cp == 0x1680 || cp == 0x205F;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// "R1.2:" style token at the start of a line. Returns the ID and sets rest
// to the text after the colon.
bool match_id_token(std::string_view line, std::string& id, std::string_view& rest) {
  std::size_t i = 0;
  bool digit = false;
  auto id_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-';
  };
  if (line.empty() || !std::isalnum(static_cast<unsigned char>(line[0]))) return false;
  while (i < line.size() && id_char(line[i])) {
    digit = digit || std::isdigit(static_cast<unsigned char>(line[i]));
    ++i;
  }
  if (!digit || i >= line.size() || line[i] != ':') return false;
  if (i + 1 < line.size() && !is_space(static_cast<unsigned char>(line[i + 1]))) return false;
  id.assign(line.substr(0, i));
  rest = line.substr(i + 1);
  return true;
}

bool directive(std::string_view line, std::string_view key, std::string& value) {
  // "# key: value"
  if (line.empty() || line.front() != '#') return false;
  auto body = trim(line.substr(1));
  if (body.size() <= key.size() || body.substr(0, key.size()) != key || body[key.size()] != ':') {
    return false;
  }
  value = normalize(body.substr(key.size() + 1));
  return true;
}

}  // namespace

const Requirement* RequirementDoc::find(std::string_view id) const {
  for (const auto& r : requirements) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

Format parse_format(std::string_view name) {
  if (name == "lines") return Format::lines;
  if (name == "numbered") return Format::numbered;
  throw ConfigError("unknown input format '" + std::string(name) + "' (expected lines or numbered)");
}

bool is_valid_utf8(std::string_view text) {
  for (std::size_t i = 0; i < text.size();) {
    const auto len = utf8_length(text, i);
    if (len == 0) return false;
    i += len;
  }
  return true;
}

std::string normalize(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  auto emit = [&](std::string_view piece) {
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.append(piece);
  };
  for (std::size_t i = 0; i < raw.size();) {
    auto len = utf8_length(raw, i);
    if (len == 0) {
      // stray byte: keep it so callers can still report the encoding error
      emit(raw.substr(i, 1));
      ++i;
      continue;
    }
    const auto cp = decode(raw, i, len);
    if (cp < 0x80 && is_space(static_cast<unsigned char>(cp))) {
      pending_space = true;
    } else if (is_unicode_space(cp)) {
      pending_space = true;
    } else if (cp < 0x20 || cp == 0x7F || (cp >= 0x80 && cp <= 0x9F) || cp == 0xFEFF ||
               cp == 0x200B) {
      // control characters and zero-width marks are dropped
    } else if (cp == 0x201C || cp == 0x201D || cp == 0x201E || cp == 0x201F || cp == 0x00AB ||
               cp == 0x00BB) {
      emit("\"");
    } else if (cp == 0x2018 || cp == 0x2019 || cp == 0x201A || cp == 0x201B) {
      emit("'");
    } else {
      emit(raw.substr(i, len));
    }
    i += len;
  }
  return out;
}

RequirementDoc load_requirements(std::istream& source, Format format, std::string default_doc_id,
                                 const std::string& source_name) {
  RequirementDoc doc;
  doc.doc_id = std::move(default_doc_id);
  std::unordered_map<std::string, std::size_t> seen;  // id -> line

  std::string line;
  std::size_t line_no = 0;
  std::string pending;  // numbered mode: text of the open requirement
  bool open = false;

  auto close = [&] {
    if (!open) return;
    doc.requirements.back().text = normalize(pending);
    pending.clear();
    open = false;
  };
  auto start = [&](std::string id, std::string_view text) {
    close();
    if (auto it = seen.find(id); it != seen.end()) {
      throw ParseError(source_name, line_no,
                       "duplicate requirement id '" + id + "' (first defined on line " +
                           std::to_string(it->second) + ")");
    }
    seen.emplace(id, line_no);
    Requirement r;
    r.id = std::move(id);
    r.ordinal = doc.requirements.size() + 1;
    r.source_line = line_no;
    doc.requirements.push_back(std::move(r));
    pending.assign(text);
    open = true;
  };

  while (std::getline(source, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (!is_valid_utf8(view)) {
      throw ParseError(source_name, line_no, "input is not valid UTF-8");
    }
    const auto trimmed = trim(view);
    if (trimmed.empty()) continue;
    if (trimmed.front() == '#') {
      std::string value;
      if (directive(trimmed, "doc", value) && !value.empty()) {
        doc.doc_id = value;
      } else if (directive(trimmed, "title", value)) {
        doc.title = value;
      }
      continue;
    }
    if (format == Format::lines) {
      start("R" + std::to_string(doc.requirements.size() + 1), trimmed);
      close();
      continue;
    }
    std::string id;
    std::string_view rest;
    if (match_id_token(trimmed, id, rest)) {
      start(std::move(id), rest);
    } else if (open) {
      pending.push_back(' ');
      pending.append(trimmed);
    } else {
      throw ParseError(source_name, line_no, "text before the first requirement id");
    }
  }
  close();
  return doc;
}

void write_numbered(std::ostream& out, const RequirementDoc& doc) {
  out << "# doc: " << doc.doc_id << '\n';
  if (!doc.title.empty()) out << "# title: " << doc.title << '\n';
  for (const auto& r : doc.requirements) {
    out << r.id << ':';
    if (!r.text.empty()) out << ' ' << r.text;
    out << '\n';
  }
}

}  // namespace cotir::corpus
