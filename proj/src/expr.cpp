#include "tscalc/expr.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "tscalc/errors.hpp"

namespace tscalc {

struct RealExpr::Node {
  enum class Op {
    Const,
    Var,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Neg,
    Sin,
    Cos,
    Exp,
    Log,
    Sqrt,
    Abs,
    Min,
    Max,
    Apply,
  };

  Op op;
  double value = 0.0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  std::function<double(double)> fn;
  std::string label;
};

namespace {

using Node = RealExpr::Node;
using Op = RealExpr::Node::Op;

std::shared_ptr<const Node> make_node(Op op, std::shared_ptr<const Node> a = nullptr,
                                      std::shared_ptr<const Node> b = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

double eval_node(const Node& n, double t) {
  switch (n.op) {
    case Op::Const:
      return n.value;
    case Op::Var:
      return t;
    case Op::Add:
      return eval_node(*n.a, t) + eval_node(*n.b, t);
    case Op::Sub:
      return eval_node(*n.a, t) - eval_node(*n.b, t);
    case Op::Mul:
      return eval_node(*n.a, t) * eval_node(*n.b, t);
    case Op::Div: {
      const double den = eval_node(*n.b, t);
      if (den == 0.0) throw EvalError("division by zero");
      return eval_node(*n.a, t) / den;
    }
    case Op::Pow: {
      const double base = eval_node(*n.a, t);
      const double ex = eval_node(*n.b, t);
      if (base < 0.0 && std::nearbyint(ex) != ex) {
        throw EvalError("negative base raised to a non-integer power");
      }
      if (base == 0.0 && ex < 0.0) throw EvalError("zero raised to a negative power");
      return std::pow(base, ex);
    }
    case Op::Neg:
      return -eval_node(*n.a, t);
    case Op::Sin:
      return std::sin(eval_node(*n.a, t));
    case Op::Cos:
      return std::cos(eval_node(*n.a, t));
    case Op::Exp:
      return std::exp(eval_node(*n.a, t));
    case Op::Log: {
      const double x = eval_node(*n.a, t);
      if (x <= 0.0) throw EvalError("log of a non-positive value");
      return std::log(x);
    }
    case Op::Sqrt: {
      const double x = eval_node(*n.a, t);
      if (x < 0.0) throw EvalError("sqrt of a negative value");
      return std::sqrt(x);
    }
    case Op::Abs:
      return std::fabs(eval_node(*n.a, t));
    case Op::Min:
      return std::min(eval_node(*n.a, t), eval_node(*n.b, t));
    case Op::Max:
      return std::max(eval_node(*n.a, t), eval_node(*n.b, t));
    case Op::Apply:
      return n.fn(eval_node(*n.a, t));
  }
  throw EvalError("corrupt expression node");
}

bool constant_node(const Node& n) {
  switch (n.op) {
    case Op::Const:
      return true;
    case Op::Var:
      return false;
    case Op::Apply:
      return false;  // opaque; assume it may depend on its argument
    default:
      return (!n.a || constant_node(*n.a)) && (!n.b || constant_node(*n.b));
  }
}

std::shared_ptr<const Node> substitute_node(const std::shared_ptr<const Node>& n,
                                            const std::shared_ptr<const Node>& inner) {
  if (!n) return nullptr;
  if (n->op == Op::Var) return inner;
  if (n->op == Op::Const) return n;
  auto copy = std::make_shared<Node>(*n);
  copy->a = substitute_node(n->a, inner);
  copy->b = substitute_node(n->b, inner);
  return copy;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_node(const Node& n, std::string& out) {
  switch (n.op) {
    case Op::Const:
      out += format_number(n.value);
      return;
    case Op::Var:
      out += "t";
      return;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Pow: {
      const char* sym = n.op == Op::Add   ? " + "
                        : n.op == Op::Sub ? " - "
                        : n.op == Op::Mul ? "*"
                        : n.op == Op::Div ? "/"
                                          : "^";
      out += "(";
      print_node(*n.a, out);
      out += sym;
      print_node(*n.b, out);
      out += ")";
      return;
    }
    case Op::Neg:
      out += "(-";
      print_node(*n.a, out);
      out += ")";
      return;
    case Op::Sin:
    case Op::Cos:
    case Op::Exp:
    case Op::Log:
    case Op::Sqrt:
    case Op::Abs: {
      const char* name = n.op == Op::Sin   ? "sin"
                         : n.op == Op::Cos ? "cos"
                         : n.op == Op::Exp ? "exp"
                         : n.op == Op::Log ? "log"
                         : n.op == Op::Sqrt ? "sqrt"
                                            : "abs";
      out += name;
      out += "(";
      print_node(*n.a, out);
      out += ")";
      return;
    }
    case Op::Min:
    case Op::Max:
      out += n.op == Op::Min ? "min(" : "max(";
      print_node(*n.a, out);
      out += ", ";
      print_node(*n.b, out);
      out += ")";
      return;
    case Op::Apply:
      out += n.label.empty() ? "<fn>" : n.label;
      out += "(";
      print_node(*n.a, out);
      out += ")";
      return;
  }
}

}  // namespace

RealExpr::RealExpr() : node_(make_node(Op::Const)) {}

double RealExpr::operator()(double t) const { return eval_node(*node_, t); }

bool RealExpr::is_constant() const { return constant_node(*node_); }

RealExpr RealExpr::substitute(const RealExpr& inner) const {
  return RealExpr(substitute_node(node_, inner.node_));
}

std::string RealExpr::str() const {
  std::string out;
  print_node(*node_, out);
  return out;
}

RealExpr RealExpr::constant(double v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = v;
  return RealExpr(std::shared_ptr<const Node>(n));
}

RealExpr RealExpr::variable() { return RealExpr(make_node(Op::Var)); }

RealExpr RealExpr::apply(std::string label, std::function<double(double)> fn, RealExpr arg) {
  auto n = std::make_shared<Node>();
  n->op = Op::Apply;
  n->a = arg.node_;
  n->fn = std::move(fn);
  n->label = std::move(label);
  return RealExpr(std::shared_ptr<const Node>(n));
}

RealExpr operator+(RealExpr a, RealExpr b) { return RealExpr(make_node(Op::Add, a.node_, b.node_)); }
RealExpr operator-(RealExpr a, RealExpr b) { return RealExpr(make_node(Op::Sub, a.node_, b.node_)); }
RealExpr operator*(RealExpr a, RealExpr b) { return RealExpr(make_node(Op::Mul, a.node_, b.node_)); }
RealExpr operator/(RealExpr a, RealExpr b) { return RealExpr(make_node(Op::Div, a.node_, b.node_)); }
RealExpr operator-(RealExpr a) { return RealExpr(make_node(Op::Neg, a.node_)); }
RealExpr pow(RealExpr base, RealExpr exponent) {
  return RealExpr(make_node(Op::Pow, base.node_, exponent.node_));
}
RealExpr sin(RealExpr a) { return RealExpr(make_node(Op::Sin, a.node_)); }
RealExpr cos(RealExpr a) { return RealExpr(make_node(Op::Cos, a.node_)); }
RealExpr exp(RealExpr a) { return RealExpr(make_node(Op::Exp, a.node_)); }
RealExpr log(RealExpr a) { return RealExpr(make_node(Op::Log, a.node_)); }
RealExpr sqrt(RealExpr a) { return RealExpr(make_node(Op::Sqrt, a.node_)); }
RealExpr abs(RealExpr a) { return RealExpr(make_node(Op::Abs, a.node_)); }
RealExpr min(RealExpr a, RealExpr b) { return RealExpr(make_node(Op::Min, a.node_, b.node_)); }
RealExpr max(RealExpr a, RealExpr b) { return RealExpr(make_node(Op::Max, a.node_, b.node_)); }

}  // namespace tscalc
