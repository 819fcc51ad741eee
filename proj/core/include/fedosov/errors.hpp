// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fedosov {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The 2-form is numerically degenerate at the requested point.
class SingularForm : public Error {
 public:
  using Error::Error;
};

/// The point lies outside the admissible domain of a field.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

/// Tensor or vector operands have incompatible rank, extent or signature.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Adaptive integration could not continue with a step above the floor.
class StepFailure : public Error {
 public:
  using Error::Error;
};

/// A constrained run left its constraint surface.
class ConstraintDrift : public Error {
 public:
  using Error::Error;
};

}  // namespace fedosov
