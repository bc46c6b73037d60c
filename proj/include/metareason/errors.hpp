#pragma once

#include <stdexcept>

namespace metareason {

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text that cannot be turned into a valid document. Messages name the
// offending field with a JSON-path-like prefix ("profiles[0].breakpoints[2]").
class ParseError : public Error {
 public:
  using Error::Error;
};

// A domain type's invariants were violated at construction time.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace metareason
