#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace halfspace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw parameters violating one or more admissibility inequalities.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// An operation was called outside its precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Kernel evaluated at (or numerically indistinguishable from) its pole.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// The quadrature could not certify the requested tolerance within its panel budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_bound);

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

/// Malformed text input (config files, CSV tables).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A covering budget certificate failed.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Too many samples of a ray fall inside the exceptional set.
class ObstructedRayError : public Error {
 public:
  ObstructedRayError(const std::string& what, double clear_fraction);

  double clear_fraction() const noexcept { return clear_fraction_; }

 private:
  double clear_fraction_;
};

}  // namespace halfspace
