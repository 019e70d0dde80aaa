#pragma once

#include <stdexcept>
#include <string>

namespace vmlk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Density at (or below) the degenerate-density tolerance.
class DegenerateDensityError : public Error {
 public:
  using Error::Error;
};

/// Net charge on the torus: Gauss's law has no periodic solution.
class NeutralityError : public Error {
 public:
  using Error::Error;
};

/// Fields or distributions defined on different grids.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

/// A time step produced a non-positive sample. Carries the rejected step size.
class StepRejected : public Error {
 public:
  StepRejected(const std::string& what, double dt) : Error(what), dt_(dt) {}
  double dt() const { return dt_; }

 private:
  double dt_;
};

}  // namespace vmlk
