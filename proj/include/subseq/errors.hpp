#pragma once

#include <stdexcept>

namespace subseq {

/// Malformed or out-of-contract input (bad symbol id, k = 0, probabilities
/// not summing to one, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration oracle was asked to do more work than its budget allows.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the region where a formula is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The sampled statistic has zero spread, so it cannot be standardized.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subseq
