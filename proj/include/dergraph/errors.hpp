#pragma once

#include <stdexcept>

namespace dergraph {

/// Two operands of different degree.
class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is only defined for a range of degrees n.
class UnsupportedDegree : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input violates an operation's precondition; the message names which one.
class RejectedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dergraph
