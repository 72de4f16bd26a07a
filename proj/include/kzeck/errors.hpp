#pragma once

#include <stdexcept>
#include <string>

namespace kzeck {

/// Caller supplied something outside an operation's domain.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. These indicate a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IndexOutOfDomain : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ZeroVector : public ValidationError {
 public:
  ZeroVector() : ValidationError("operation requires a nonzero vector") {}
};

class NotSatisfying : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DivisionByNonUnit : public ValidationError {
 public:
  DivisionByNonUnit() : ValidationError("series division by a series with zero constant term") {}
};

/// Brute-force search bound too small to contain the answer.
class NotFound : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ConvergenceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class JBoundTooSmall : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class NormalizationDiverged : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class MultipleFound : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class ReconstructionMismatch : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class StrategyMismatch : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace kzeck
