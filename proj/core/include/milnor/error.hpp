#pragma once

#include <stdexcept>
#include <string>

namespace milnor {

// Bad arguments to a library call (out-of-range index, mismatched ranks, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input text or files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally inconsistent diagram data.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A required vanishing hypothesis does not hold for the given input.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invariant violated inside the engine; indicates a bug or an unsupported input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace milnor
