#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tscalc/expr.hpp"
#include "tscalc/interval.hpp"
#include "tscalc/time_scale.hpp"

namespace tscalc {

enum class Monotone { Unknown, Increasing, Decreasing };

// One conjunction of constraints on the function argument. Comparisons use a
// tolerance trichotomy (|t - c| <= tol counts as equal, so a strict bound
// excludes such t); this makes equality pieces win at shared points once
// arguments are snapped to canonical scale values.
struct Condition {
  struct Bound {
    double value;
    bool strict;
  };

  bool always = false;
  std::optional<Bound> lower;        // lower.value <(=) t
  std::optional<Bound> upper;        // t <(=) upper.value
  std::optional<double> eq;          // t == eq
  std::optional<double> geom_ratio;  // t in { q^k : k integer }, q > 1
  std::optional<double> grid_step;   // t in { k*h : k integer }, h > 0

  bool matches(double t, double tol) const;
  bool equality_at(double t, double tol) const { return eq && std::fabs(*eq - t) <= tol; }
  std::string str() const;

  static Condition everywhere() {
    Condition c;
    c.always = true;
    return c;
  }
  static Condition equals(double v) {
    Condition c;
    c.eq = v;
    return c;
  }
  static Condition range(double lo, bool lo_strict, double hi, bool hi_strict) {
    Condition c;
    c.lower = Bound{lo, lo_strict};
    c.upper = Bound{hi, hi_strict};
    return c;
  }
  static Condition at_least(double lo, bool strict = false) {
    Condition c;
    c.lower = Bound{lo, strict};
    return c;
  }
  static Condition below(double hi, bool strict = true) {
    Condition c;
    c.upper = Bound{hi, strict};
    return c;
  }
};

// Exact bounds of an endpoint pair over a closed cell: lo = inf of the lower
// endpoint, hi = sup of the upper endpoint. Piece-supplied oracles answer for
// any non-degenerate real sub-cell of the piece domain.
struct EnvelopePair {
  double lo;
  double hi;
};
using CellOracle = std::function<EnvelopePair(double, double)>;

struct Piece {
  Condition cond;
  RealExpr lower;
  RealExpr upper;
  bool continuous = true;
  Monotone mono_lower = Monotone::Unknown;
  Monotone mono_upper = Monotone::Unknown;
  std::optional<CellOracle> oracle;
};

// A piecewise interval-valued function of one real variable. Pieces are
// ordered; at a point matched by several, an equality piece wins, otherwise
// the later piece. eval() sorts the two endpoint values so floating-point
// noise between equivalent expressions cannot produce an inverted interval.
class IntervalFn {
 public:
  explicit IntervalFn(std::vector<Piece> pieces, std::vector<double> extra_breaks = {});

  static IntervalFn from_pair(RealExpr lower, RealExpr upper, bool continuous = true,
                              Monotone mono_lower = Monotone::Unknown,
                              Monotone mono_upper = Monotone::Unknown);
  static IntervalFn constant(const Interval& v);
  // Two-branch function: evaluates to `on_first` at every representable
  // argument, while the envelope over any non-degenerate cell is the hull of
  // both branches. Not continuous.
  static IntervalFn dirichlet(const Interval& on_first, const Interval& off_first);

  Interval eval(double t) const;
  const Piece& governing(double t) const;  // DomainCoverageError when uncovered
  const std::vector<Piece>& pieces() const { return pieces_; }
  double condition_tol() const { return cond_tol_; }

  // Condition constants (bounds/equalities) and inherited breakpoints lying
  // strictly inside (a, b); integration splits segments there.
  std::vector<double> breakpoints(double a, double b) const;

  // True when every governing piece over [a, b)_T carries the continuity flag.
  bool continuous_on(const TimeScale& T, double a, double b) const;
  IntervalFn marked_continuous(bool flag = true) const;

  // lower(t) <= upper(t) sampled over `samples` points of [a, b]_T.
  void validate_ordered(const TimeScale& T, double a, double b, int samples = 513) const;

 private:
  std::vector<Piece> pieces_;
  std::vector<double> extra_breaks_;
  double cond_tol_ = 1e-12;
};

// Exact-or-sampled bounds of f over the half-open time-scale cell [c, d)_T:
// scattered points contribute pointwise values; continuum parts use, per
// governing piece, the supplied oracle, endpoint evaluation under a declared
// monotonicity, or dense sampling with local golden-section refinement. For
// continuous pieces the sup/inf over [c, d) equals the closed-cell extremum,
// which is what the continuum path computes.
EnvelopePair envelope(const IntervalFn& f, const TimeScale& T, double c, double d);

// Pointwise algebra. Results evaluate to the interval-arithmetic combination
// at every argument. Oracles and monotonicity survive scaling (exactly);
// sums/products/powers fall back to the sampled envelope.
IntervalFn scale(double lambda, const IntervalFn& f);
IntervalFn add(const IntervalFn& f, const IntervalFn& g);
IntervalFn product(const IntervalFn& f, const IntervalFn& g);
IntervalFn power(const IntervalFn& f, double p);
// s -> |h(s)| * f(g(s))
IntervalFn weight_compose(const RealExpr& h, const IntervalFn& f, const RealExpr& g);

}  // namespace tscalc
