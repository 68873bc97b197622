#pragma once

#include <stdexcept>
#include <string>

namespace quids {

// Invalid configuration, invalid arguments, mismatched grids.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line = -1)
      : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// A metric or inference result is undefined for the given inputs.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

// A run-level property check failed in self-check mode.
class SelfCheckError : public std::runtime_error {
 public:
  explicit SelfCheckError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quids
