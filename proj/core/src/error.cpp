#include "saxshape/error.hpp"

namespace saxshape {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return "invalid input";
    case ErrorKind::kUnsupportedAlphabet:
      return "unsupported alphabet";
    case ErrorKind::kEmptyShape:
      return "empty shape";
    case ErrorKind::kDegenerateShape:
      return "degenerate shape";
    case ErrorKind::kDegenerateClass:
      return "degenerate class";
    case ErrorKind::kParse:
      return "parse error";
  }
  return "unknown error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

namespace {

std::string located(ParseError::Unit unit, std::size_t offset,
                    const std::string& message) {
  const char* where = unit == ParseError::Unit::kByte ? "byte " : "line ";
  return std::string(where) + std::to_string(offset) + ": " + message;
}

}  // namespace

ParseError::ParseError(Unit unit, std::size_t offset, const std::string& message)
    : Error(ErrorKind::kParse, located(unit, offset, message)),
      unit_(unit),
      offset_(offset) {}

}  // namespace saxshape
