#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sylow {

// Base of every error the toolkit raises. The CLI maps each subclass onto
// an exit code: usage/parse/invalid input -> 1, refusal -> 2, cross-check -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A computation that would exceed a configured cap (element count, node budget).
class Refusal : public Error {
 public:
  using Error::Error;
};

// Two independent routes disagreed, or a Sylow-theoretic invariant failed.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace sylow
