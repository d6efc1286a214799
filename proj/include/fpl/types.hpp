#pragma once

#include <stdexcept>
#include <string>

namespace fpl {

enum class ErrorKind {
  bound_exceeded,
  invalid_grid,
  invalid_triple,
  contradiction,
  structure,
  incompatible_box,
  not_a_matching,
  parse,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::bound_exceeded: return "bound_exceeded";
    case ErrorKind::invalid_grid: return "invalid_grid";
    case ErrorKind::invalid_triple: return "invalid_triple";
    case ErrorKind::contradiction: return "contradiction";
    case ErrorKind::structure: return "structure";
    case ErrorKind::incompatible_box: return "incompatible_box";
    case ErrorKind::not_a_matching: return "not_a_matching";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg)
      : std::runtime_error(std::string(to_string(k)) + ": " + msg), kind(k) {}
};

}  // namespace fpl
