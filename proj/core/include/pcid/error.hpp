#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcid {

// Location of a token or construct in parsed text. Offsets are bytes,
// line and column are 1-based.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  bool operator==(const SourceSpan&) const = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : Error(message + " at " + std::to_string(span.line) + ":" + std::to_string(span.column)),
        message_(message),
        span_(span) {}

  const std::string& message() const noexcept { return message_; }
  const SourceSpan& span() const noexcept { return span_; }

 private:
  std::string message_;
  SourceSpan span_;
};

// A rule body contains a definition, or a rule head is not an atom.
class MalformedDefinition : public Error {
 public:
  using Error::Error;
};

class UnknownAtom : public Error {
 public:
  using Error::Error;
};

class InvalidAtomName : public Error {
 public:
  using Error::Error;
};

// Polarity was requested for an atom that occurs inside a nested definition.
class PolarityError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search would exceed the configured bounds.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// The prover was asked about a sequent outside the class it can decide.
class OutOfScope : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A rule instance does not match its rule's schema.
class SchemaMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace pcid
