#pragma once

#include <stdexcept>
#include <string>

namespace fsq {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (t <= 0, xi <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Request beyond what the numerics are built to handle (degree, magnitude).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

// Stacked basis amplitudes are numerically rank deficient.
class CompletenessError : public Error {
 public:
  CompletenessError(const std::string& what, double singular_value_ratio)
      : Error(what), ratio_(singular_value_ratio) {}
  double singular_value_ratio() const noexcept { return ratio_; }

 private:
  double ratio_;
};

// Overlap matrix too ill-conditioned to build a dual frame.
class SingularOverlapError : public Error {
 public:
  SingularOverlapError(const std::string& what, double condition_number)
      : Error(what), condition_(condition_number) {}
  double condition_number() const noexcept { return condition_; }

 private:
  double condition_;
};

class GridMismatchError : public Error {
 public:
  using Error::Error;
};

// Operation refused because its certificate does not allow it.
class RefusalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fsq
