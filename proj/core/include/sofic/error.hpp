#pragma once

#include <stdexcept>
#include <string>

namespace sofic {

/// Malformed input: bad file contents, out-of-range indices, violated
/// preconditions of a public operation.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive computation was asked for beyond its size limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bound that must hold by construction was observed to fail. Seeing this
/// means the implementation is wrong, not the input.
class BoundViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sofic
