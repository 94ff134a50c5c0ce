#pragma once

#include <stdexcept>
#include <string>

namespace glt {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative evaluation did not reach the requested accuracy.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truncated distribution whose retained probability mass underflows.
class DegenerateRegionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cholesky factorization of a posterior precision failed.
class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampler was handed a state outside the support of its target.
class InvalidStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (CSV, dimensions, flags).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A chain was aborted because too many iterations failed.
class SamplerAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace glt
