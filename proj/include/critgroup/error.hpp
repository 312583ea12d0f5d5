#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace critgroup {

/// Malformed input text: graph files, configuration strings, block lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A mathematical precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotStronglyConnected : public PreconditionError {
 public:
  NotStronglyConnected() : PreconditionError("graph is not strongly connected") {}
  explicit NotStronglyConnected(const std::string& what) : PreconditionError(what) {}
};

/// A surgery theorem was invoked on inputs outside its hypotheses.
class HypothesisViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An enumeration would exceed the caller-supplied cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : std::runtime_error(what + " exceeds cap " + std::to_string(cap)), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace critgroup
