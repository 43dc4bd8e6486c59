#ifndef MLTI_ERRORS_HPP
#define MLTI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mlti {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad shapes, indices, arguments, or file contents. The CLI maps these to
/// exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IndexError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A computation refused on numerical grounds (singular operator, unstable
/// system, unreachable target, ...). The CLI maps these to exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class SingularError : public NumericalError {
 public:
  SingularError(const std::string& what, double condition_estimate)
      : NumericalError(what), condition_estimate_(condition_estimate) {}
  double condition_estimate() const { return condition_estimate_; }

 private:
  double condition_estimate_;
};

class UnstableError : public NumericalError {
 public:
  UnstableError(const std::string& what, double spectral_radius)
      : NumericalError(what), spectral_radius_(spectral_radius) {}
  double spectral_radius() const { return spectral_radius_; }

 private:
  double spectral_radius_;
};

class DefectiveError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class UnreachableError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SizeLimitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace mlti

#endif  // MLTI_ERRORS_HPP
