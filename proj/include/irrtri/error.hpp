#pragma once

#include <stdexcept>
#include <string>

namespace irrtri {

enum class ErrorCode {
  malformed_input,
  invalid_triangulation,
  no_such_edge,
  linking_edge,
  cycle_touches_boundary,
  non_simple_cycle,
  not_vertex_disjoint,
  unknown_name,
  invalid_params,
  out_of_hypothesis,
  not_irreducible,
  too_large,
  parse_error,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the TriFile reader; carries the 1-based line of the offending input.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace irrtri
