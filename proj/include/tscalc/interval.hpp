#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "tscalc/errors.hpp"

namespace tscalc {

// Closed bounded interval [lo, hi]. Degenerate intervals (lo == hi) are
// first-class; they are how plain reals enter the interval algebra.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi)) {
      throw DomainError("interval endpoints out of order: [" + std::to_string(lo_) + ", " +
                        std::to_string(hi_) + "]");
    }
  }

  static Interval point(double v) { return Interval(v, v); }

  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool degenerate() const { return lo == hi; }
  bool positive() const { return lo > 0.0; }
  bool negative() const { return hi < 0.0; }
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }
};

inline Interval add(const Interval& a, const Interval& b) {
  return Interval(a.lo + b.lo, a.hi + b.hi);
}

inline Interval sub(const Interval& a, const Interval& b) {
  return Interval(a.lo - b.hi, a.hi - b.lo);
}

inline Interval mul(const Interval& a, const Interval& b) {
  const double p1 = a.lo * b.lo;
  const double p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo;
  const double p4 = a.hi * b.hi;
  return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval div(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw DivisionByIntervalContainingZero("division by an interval containing zero");
  }
  const double q1 = a.lo / b.lo;
  const double q2 = a.lo / b.hi;
  const double q3 = a.hi / b.lo;
  const double q4 = a.hi / b.hi;
  return Interval(std::min(std::min(q1, q2), std::min(q3, q4)),
                  std::max(std::max(q1, q2), std::max(q3, q4)));
}

// lambda * [lo, hi]; lambda == 0 collapses to the degenerate {0} regardless of a.
inline Interval scalar_mul(double lambda, const Interval& a) {
  if (lambda > 0.0) return Interval(lambda * a.lo, lambda * a.hi);
  if (lambda == 0.0) return Interval(0.0, 0.0);
  return Interval(lambda * a.hi, lambda * a.lo);
}

// Range of x^p over x in a. Integer p is handled exactly by sign cases; a
// fractional p requires a.lo >= 0 (and a.lo > 0 when p < 0).
inline Interval pow(const Interval& a, double p) {
  const bool integral = std::isfinite(p) && std::nearbyint(p) == p;
  if (!integral) {
    if (a.lo < 0.0) {
      throw DomainError("fractional exponent over an interval containing negative values");
    }
    if (p >= 0.0) return Interval(std::pow(a.lo, p), std::pow(a.hi, p));
    if (a.lo == 0.0) {
      throw DomainError("negative fractional exponent over an interval touching zero");
    }
    return Interval(std::pow(a.hi, p), std::pow(a.lo, p));
  }
  const long long n = std::llrint(p);
  if (n < 0) return div(Interval(1.0, 1.0), pow(a, static_cast<double>(-n)));
  if (n == 0) return Interval(1.0, 1.0);
  if (n % 2 != 0) return Interval(std::pow(a.lo, p), std::pow(a.hi, p));
  if (a.lo >= 0.0) return Interval(std::pow(a.lo, p), std::pow(a.hi, p));
  if (a.hi <= 0.0) return Interval(std::pow(a.hi, p), std::pow(a.lo, p));
  return Interval(0.0, std::max(std::pow(a.lo, p), std::pow(a.hi, p)));
}

// Componentwise partial order: a <= b iff both endpoints are ordered.
inline bool leq(const Interval& a, const Interval& b) { return a.lo <= b.lo && a.hi <= b.hi; }

// Set inclusion a subseteq b.
inline bool subset(const Interval& a, const Interval& b) { return b.lo <= a.lo && a.hi <= b.hi; }

// Hausdorff-Pompeiu distance: max of endpoint distances.
inline double hausdorff_dist(const Interval& a, const Interval& b) {
  return std::max(std::fabs(a.lo - b.lo), std::fabs(a.hi - b.hi));
}

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }

}  // namespace tscalc
