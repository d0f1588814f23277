#pragma once

#include <stdexcept>
#include <string>

namespace vmrt {

enum class ErrorKind {
  Parse,
  VariableMismatch,
  UnknownVariable,
  DimensionMismatch,
  NotHomogeneous,
  DegreeMismatch,
  ZeroPolynomial,
  OddLength,
  InvalidArgument,
  ParameterRange,
  ShapeMismatch,
  NotExact,
  BasePointOnBranch,
  ZeroDirection,
  NormalizationViolated,
  ResultantDegenerate,
};

const char* to_string(ErrorKind kind);

// Every failure the library reports carries a kind; the CLI maps Parse to
// exit status 1 and everything else to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace vmrt
