#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cotir {

// Base for all errors raised while reading user-supplied inputs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input at a known line (1-based).
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Missing or unusable configuration (lexicon files, paths, settings).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cotir
