#pragma once

#include <stdexcept>
#include <string>

namespace qsched {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: unknown identifiers, mismatched demand domains, invalid values.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A graph exceeds the configured enumeration cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A condition's structural hypothesis does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (JSON files, rational literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A long-running computation was cancelled by its token.
class CancelledError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsched
