#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace oligodyn {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter value makes the requested formula singular (division by zero
/// or a vanishing denominator).
class SingularParameterError : public Error {
 public:
  using Error::Error;
};

/// A matrix handed to the linear solver has no acceptable pivot.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// The assembled equilibrium system is singular at the given parameters.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// The eigensolver was given a matrix that is not symmetric.
class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine exhausted its iteration budget.
class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Dimension mismatch between containers that must agree in shape.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A configuration violates one or more hard validation rules.  The full
/// list of violated rules is retained so callers can report all of them.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::vector<std::string> violations)
      : Error(what), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace oligodyn
