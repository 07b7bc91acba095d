#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace d0l {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class MissingProduction : public Error {
 public:
  explicit MissingProduction(char symbol)
      : Error(std::string("no production for symbol '") + symbol + "'"), symbol_(symbol) {}
  char symbol() const noexcept { return symbol_; }

 private:
  char symbol_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

/// Raised when some w_i is empty but w_{i+1} is not.
class DegenerateSequence : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Resource limits. The CLI maps every subclass to one exit code.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class BudgetExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class QubitCapExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class IncompleteModel : public Error {
 public:
  using Error::Error;
};

class IncompatibleModel : public Error {
 public:
  using Error::Error;
};

class NotOnePerClique : public Error {
 public:
  using Error::Error;
};

/// Two selected vertices bind one symbol to different successors. Only a
/// solver bug can produce this from a genuine independent set.
class ConflictingProduction : public Error {
 public:
  using Error::Error;
};

}  // namespace d0l
