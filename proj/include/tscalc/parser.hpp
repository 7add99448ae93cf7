#pragma once

#include <string>
#include <vector>

#include "tscalc/expr.hpp"
#include "tscalc/functions.hpp"
#include "tscalc/time_scale.hpp"

namespace tscalc {

// Textual descriptions parse into specs that keep the original literals, so
// emit() reproduces a stable canonical form and elaborate() builds the
// runtime object. Parsing already validates everything that can fail at
// elaboration time (overlaps, bad grid endpoints, non-constant dirichlet
// branches) and reports it as a ParseError at the offending position.

struct ScaleNum {
  double value;
  std::string text;  // literal as written: decimal or numerator/denominator
};

struct ScaleTerm {
  enum class Kind { Interval, Points, HGrid, Geom };
  Kind kind;
  std::vector<ScaleNum> args;
  int line = 1;
  int column = 1;
};

struct ScaleSpec {
  std::vector<ScaleTerm> terms;
};

ScaleSpec parse_scale(const std::string& text);
TimeScale elaborate(const ScaleSpec& spec);
std::string emit(const ScaleSpec& spec);

struct PairSpec {
  bool dirichlet = false;
  RealExpr lower;  // first branch when dirichlet
  RealExpr upper;
  RealExpr lower2;  // second branch, dirichlet only (constants)
  RealExpr upper2;
  std::string lower_text;
  std::string upper_text;
  std::string lower2_text;
  std::string upper2_text;
};

struct PieceSpec {
  bool explicit_cond = false;  // false: bare pair covering everything
  Condition cond;
  std::string cond_text;
  PairSpec pair;
  int line = 1;
  int column = 1;
};

struct FnSpec {
  std::vector<PieceSpec> pieces;
};

FnSpec parse_fn(const std::string& text);
IntervalFn elaborate(const FnSpec& spec);
std::string emit(const FnSpec& spec);

// A bare scalar expression in the variable t (s is accepted as a synonym).
RealExpr parse_expr(const std::string& text);

}  // namespace tscalc
