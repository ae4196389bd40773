#pragma once

#include <stdexcept>

namespace dsc {

// Argument errors use std::invalid_argument and out-of-range domain indices use
// std::out_of_range. The types below cover the remaining failure classes.

/// A search or enumeration would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked mathematical guarantee did not hold. Seeing one means either the
/// inputs broke a precondition or an implementation is wrong.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The class has no concept consistent with a sample handed to a learner.
class RealizabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative procedure hit its round cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dsc
