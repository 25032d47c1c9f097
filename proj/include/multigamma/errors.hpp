#pragma once

#include <stdexcept>
#include <string>

namespace multigamma {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument on (or within 1e-8 of) the non-positive integer lattice where G_r has a zero or pole.
class SingularInput : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters: pole of zeta at s = 1, a <= 0, sector violation, short ladders.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConventionError : public Error {
 public:
  using Error::Error;
};

/// Calibration found zero or several surviving convention sets.
class CalibrationError : public Error {
 public:
  using Error::Error;
};

/// Two evaluation routes disagreed beyond the allowed margin.
class CrossValidationError : public Error {
 public:
  using Error::Error;
};

/// A NaN or infinity was produced; never returned to callers.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

}  // namespace multigamma
