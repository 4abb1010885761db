#pragma once

#include <stdexcept>
#include <string>

namespace dimred {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic or elimination over two different scalar fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A floating-point system is singular or too ill-conditioned to trust,
/// or an exact matrix has no inverse.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// An arrangement could not be built (bad parameters, non-essential result).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition was violated (non-spanning subset, bad
/// dimension, element outside the ground set, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Shapes (or configurations) with incompatible dimensions were combined.
class DimensionMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace dimred
