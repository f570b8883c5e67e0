#pragma once

#include <stdexcept>
#include <string>

namespace giq {

/// Malformed or invalid user input: bad file, bad polynomial text, a
/// violated precondition on caller-supplied data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object failed an internal consistency check, e.g. a product of
/// complementary-degree classes escaping the span of the top class.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by presets that require balanced weights.
class BalanceError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace giq
