#pragma once

#include <stdexcept>
#include <string>

namespace cubegauss {

/// Argument outside the domain an operation is defined (or validated) on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation exactly at the integrable pole of the X^3 density.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A quadrature could not reach its tolerance within the panel budget.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double achieved, double requested)
      : std::runtime_error(what), achieved_(achieved), requested_(requested) {}

  double achieved() const noexcept { return achieved_; }
  double requested() const noexcept { return requested_; }

 private:
  double achieved_;
  double requested_;
};

}  // namespace cubegauss
