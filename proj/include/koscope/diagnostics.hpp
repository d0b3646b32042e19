#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace koscope {

enum class Severity { Info, Warning, Error };

struct Diagnostic {
  Severity severity = Severity::Warning;
  std::string code;     // short machine id, e.g. "unknown-word"
  std::string message;
  std::string where;    // entry id, file:line, ... (may be empty)

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

const char* to_string(Severity s);

inline void warn(Diagnostics& out, std::string code, std::string message,
                 std::string where = {}) {
  out.push_back({Severity::Warning, std::move(code), std::move(message),
                 std::move(where)});
}

inline void note(Diagnostics& out, std::string code, std::string message,
                 std::string where = {}) {
  out.push_back({Severity::Info, std::move(code), std::move(message),
                 std::move(where)});
}

// Base for all failures the library reports by exception.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or malformed input data. The CLI maps these to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

// Syntax error in a structured input, with a 1-based position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Invalid configuration (bad flag values, bad rule files). Exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace koscope
