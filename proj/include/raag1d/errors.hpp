#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raag1d {

// Base of every error raised by the library. Callers that only care about
// "bad input" versus "bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class EmptyGraph : public Error {
 public:
  EmptyGraph() : Error("graph has no vertices") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  DomainMismatch() : Error("maps act on different domains") {}
};

class InvalidMap : public Error {
 public:
  using Error::Error;
};

class TrivialWord : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class IdentityInput : public Error {
 public:
  using Error::Error;
};

}  // namespace raag1d
