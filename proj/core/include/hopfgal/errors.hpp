#pragma once

#include <stdexcept>
#include <string>

namespace hopfgal {

// Base class for all precondition violations raised by the library.  Checks
// that are part of the *verification* surface never throw; they produce
// Report entries instead.  Exceptions are reserved for malformed inputs:
// mismatched dimensions, mixed fields, unparsable files, bad bindings.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& what) : Error(what) {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_no(line) {}
  std::size_t line_no;
};

struct BindingError : Error {
  explicit BindingError(const std::string& what) : Error(what) {}
};

}  // namespace hopfgal
