#pragma once

#include <stdexcept>
#include <string>

namespace gaugecount {

/// Bad input or violated precondition. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured size guard.
class GuardExceeded : public InputError {
 public:
  using InputError::InputError;
};

/// An identity that must hold by theorem failed; always an implementation bug.
/// The CLI maps this to exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gaugecount
