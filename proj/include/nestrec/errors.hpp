#pragma once

#include <stdexcept>
#include <string>

namespace nestrec {

/// Caller passed an argument outside the operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input that is well-formed but violates a stated precondition,
/// e.g. an f that is not in F_n where membership is required.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Checked machine-width arithmetic overflowed.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace nestrec
