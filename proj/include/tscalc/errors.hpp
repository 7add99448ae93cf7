#pragma once

#include <stdexcept>
#include <string>

namespace tscalc {

// Root of every error this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// interval arithmetic
struct DivisionByIntervalContainingZero : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};

// time scales
struct ScaleError : Error {
  using Error::Error;
};
struct PointNotInScale : Error {
  using Error::Error;
};
struct EmptyRange : Error {
  using Error::Error;
};

// expression / function evaluation
struct EvalError : Error {
  using Error::Error;
};
struct DomainCoverageError : Error {
  using Error::Error;
};

// integration
struct NotContinuous : Error {
  using Error::Error;
};

// inequality checks
struct WeightDegenerate : Error {
  using Error::Error;
};
struct SignPreconditionError : Error {
  using Error::Error;
};
struct ExponentError : Error {
  using Error::Error;
};
struct NotConvex : Error {
  using Error::Error;
};

// DSL
struct ParseError : Error {
  int line;
  int column;
  std::string token;

  ParseError(const std::string& message, int line_, int column_, std::string token_)
      : Error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + message +
              (token_.empty() ? std::string() : " (at '" + token_ + "')")),
        line(line_),
        column(column_),
        token(std::move(token_)) {}
};

}  // namespace tscalc
