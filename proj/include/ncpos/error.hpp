#pragma once

#include <stdexcept>
#include <string>

namespace ncpos {

/// Caller passed something outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed object violated an invariant the mathematics guarantees.
/// Seeing one of these means a bug in this library, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ncpos
