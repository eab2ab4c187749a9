#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Malformed words, keys, selectors or arguments that violate a precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The operation is not defined for the given generating set.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configured resource cap (element count or wall-clock deadline) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A persisted ball failed its structural invariants on load.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cayley
