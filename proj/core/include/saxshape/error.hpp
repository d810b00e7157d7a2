#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace saxshape {

enum class ErrorKind {
  kInvalidInput,
  kUnsupportedAlphabet,
  kEmptyShape,
  kDegenerateShape,
  kDegenerateClass,
  kParse,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error thrown by the library. `kind()` lets callers branch
/// without a cascade of catch clauses.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input text or bytes. `offset` is a byte offset for binary
/// formats and a 1-based line number for line-oriented ones; `unit()` says
/// which.
class ParseError : public Error {
 public:
  enum class Unit { kByte, kLine };

  ParseError(Unit unit, std::size_t offset, const std::string& message);

  Unit unit() const noexcept { return unit_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Unit unit_;
  std::size_t offset_;
};

}  // namespace saxshape
