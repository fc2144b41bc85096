#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mincplx {

enum class ErrorCode {
  invalid_argument,
  invalid_dimension,
  unsupported_dimension,
  vertex_out_of_range,
  face_not_in_complex,
  size_guard,
  partition_too_small,
  singular,
  parse,
  io,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::invalid_dimension: return "invalid-dimension";
    case ErrorCode::unsupported_dimension: return "unsupported-dimension";
    case ErrorCode::vertex_out_of_range: return "vertex-out-of-range";
    case ErrorCode::face_not_in_complex: return "face-not-in-complex";
    case ErrorCode::size_guard: return "size-guard";
    case ErrorCode::partition_too_small: return "partition-too-small";
    case ErrorCode::singular: return "singular";
    case ErrorCode::parse: return "parse";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input text rejected; `line()` is 1-based (0 when the input ended early).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mincplx
