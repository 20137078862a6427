#pragma once

#include <stdexcept>
#include <string>

namespace bihom {

/// Malformed or inconsistent input data (bad shapes, bad rationals, unknown keys).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on data that violates its mathematical precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A subspace that must contain another does not.
class ContainmentError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An extension admits no twist-compatible linear section.
class NotSplitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bihom
