#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mresr {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (QDIMACS, proof files, certificates, dumps).
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// An operation was called outside its precondition (unknown variable,
/// inconsistent union, pivot on the wrong side of a universal, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A desk-scale cap was exceeded (table support, enumeration width,
/// search budget). Distinct from a negative verdict.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

} // namespace mresr
