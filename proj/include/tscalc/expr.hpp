#pragma once

#include <functional>
#include <memory>
#include <string>

namespace tscalc {

// Immutable scalar expression tree in one variable. Evaluation throws
// EvalError on domain violations (log of a non-positive value, sqrt of a
// negative, division by zero, 0 raised to a negative power, ...).
//
// Besides the parseable surface (arithmetic, sin/cos/exp/log/sqrt/abs,
// constants), the tree supports two internal node kinds used by the
// pointwise interval-function algebra: min/max, and "apply", which wraps an
// opaque double(double) callable around a subexpression. Those never come
// out of the parser; they exist so combined functions stay evaluable.
class RealExpr {
 public:
  struct Node;  // defined in expr.cpp; the tree is opaque to clients

  RealExpr();  // the constant 0

  double operator()(double t) const;
  bool is_constant() const;        // no variable occurs
  RealExpr substitute(const RealExpr& inner) const;  // variable := inner
  std::string str() const;

  static RealExpr constant(double v);
  static RealExpr variable();
  static RealExpr apply(std::string label, std::function<double(double)> fn, RealExpr arg);

  friend RealExpr operator+(RealExpr a, RealExpr b);
  friend RealExpr operator-(RealExpr a, RealExpr b);
  friend RealExpr operator*(RealExpr a, RealExpr b);
  friend RealExpr operator/(RealExpr a, RealExpr b);
  friend RealExpr operator-(RealExpr a);
  friend RealExpr pow(RealExpr base, RealExpr exponent);
  friend RealExpr sin(RealExpr a);
  friend RealExpr cos(RealExpr a);
  friend RealExpr exp(RealExpr a);
  friend RealExpr log(RealExpr a);
  friend RealExpr sqrt(RealExpr a);
  friend RealExpr abs(RealExpr a);
  friend RealExpr min(RealExpr a, RealExpr b);
  friend RealExpr max(RealExpr a, RealExpr b);

 private:
  explicit RealExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace tscalc
