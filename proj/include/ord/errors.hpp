#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ord {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition (bad input, invalid code,
// malformed expression). Maps to CLI exit code 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap was hit. Nothing is silently truncated; callers
// raise the cap explicitly if they want a bigger computation. Exit code 3.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// An instance contradicted a statement this library treats as proven. This
// indicates an implementation bug, never user error. Exit code 1.
class FalsificationError : public Error {
 public:
  using Error::Error;
};

// Expression syntax error with position and expectation info.
class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, std::size_t position, std::string expected)
      : PreconditionError(what), position_(position), expected_(std::move(expected)) {}
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// A natural number that is not a valid ordinal code.
class InvalidCodeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace ord
