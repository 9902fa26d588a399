#pragma once

#include <stdexcept>
#include <string>

namespace casimir_landau {

//! Input outside the physical domain of a formula (x = 0, x >= 2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

//! A ladder-operator truncation too small to represent the requested level.
class TruncationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

//! NaN/Inf produced by an integrand, or a singular linear operation.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularResolvent : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace casimir_landau
