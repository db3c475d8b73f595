#pragma once

#include <stdexcept>
#include <string>

namespace qsuper {

enum class ErrorKind {
  DivisionByNonUnit,
  ParityViolation,
  IndeterminateValuation,
  NegativeValuation,
  NonSquareTensorDim,
  SingularTransform,
  AlgebraMismatch,
  NonUnitLeadingCoefficient,
  GeneratorMismatch,
  DimensionMismatch,
  EmptyResult,
  SyntaxError,
  UnknownSymbol,
  DivisionByGeneratorExpression,
  UnknownId,
  InvalidArgument,
  TruncationTooLow,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qsuper
