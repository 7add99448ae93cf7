#include "tscalc/functions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace tscalc {

namespace {

std::string num(double v) { return std::to_string(v); }

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Monotone flip(Monotone m) {
  if (m == Monotone::Increasing) return Monotone::Decreasing;
  if (m == Monotone::Decreasing) return Monotone::Increasing;
  return Monotone::Unknown;
}

Monotone combine(Monotone a, Monotone b) { return a == b ? a : Monotone::Unknown; }

bool all_pieces_continuous(const IntervalFn& f) {
  return std::all_of(f.pieces().begin(), f.pieces().end(),
                     [](const Piece& p) { return p.continuous; });
}

// Minimum of fn over [a, b] starting from the best sampled value, sharpened
// by a few golden-section steps.
double golden_min(const std::function<double(double)>& fn, double a, double b, double seed,
                  int iters) {
  constexpr double invphi = 0.61803398874989484820;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = fn(x1);
  double f2 = fn(x2);
  double best = std::min(seed, std::min(f1, f2));
  for (int i = 0; i < iters; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = fn(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = fn(x2);
    }
    best = std::min(best, std::min(f1, f2));
  }
  return best;
}

constexpr int kEnvelopeSamples = 1025;
constexpr int kGoldenIters = 3;

double expr_min(const RealExpr& e, double u, double v, Monotone mono) {
  if (!(v > u)) return e(u);
  if (mono == Monotone::Increasing) return e(u);
  if (mono == Monotone::Decreasing) return e(v);
  const double step = (v - u) / (kEnvelopeSamples - 1);
  double best = std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i < kEnvelopeSamples; ++i) {
    const double x = (i == kEnvelopeSamples - 1) ? v : u + i * step;
    const double y = e(x);
    if (y < best) {
      best = y;
      best_i = i;
    }
  }
  const double lo = std::max(u, u + (best_i - 1) * step);
  const double hi = std::min(v, u + (best_i + 1) * step);
  return golden_min([&](double x) { return e(x); }, lo, hi, best, kGoldenIters);
}

double expr_max(const RealExpr& e, double u, double v, Monotone mono) {
  return -expr_min(RealExpr::constant(0.0) - e, u, v, flip(mono));
}

}  // namespace

bool Condition::matches(double t, double tol) const {
  if (always) return true;
  const auto near = [&](double c) { return std::fabs(t - c) <= tol; };
  if (eq && !near(*eq)) return false;
  if (lower) {
    if (near(lower->value)) {
      if (lower->strict) return false;
    } else if (t < lower->value) {
      return false;
    }
  }
  if (upper) {
    if (near(upper->value)) {
      if (upper->strict) return false;
    } else if (t > upper->value) {
      return false;
    }
  }
  if (geom_ratio) {
    if (!(t > 0.0)) return false;
    const double k = std::log(t) / std::log(*geom_ratio);
    if (std::fabs(k - std::nearbyint(k)) > 1e-9) return false;
  }
  if (grid_step) {
    const double k = t / *grid_step;
    if (std::fabs(k - std::nearbyint(k)) > 1e-9 * std::max(1.0, std::fabs(k))) return false;
  }
  return true;
}

std::string Condition::str() const {
  std::string out;
  auto join = [&](const std::string& s) {
    if (!out.empty()) out += " and ";
    out += s;
  };
  if (lower && upper) {
    join(fmt_num(lower->value) + (lower->strict ? " < " : " <= ") + "t" +
         (upper->strict ? " < " : " <= ") + fmt_num(upper->value));
  } else if (lower) {
    join("t " + std::string(lower->strict ? ">" : ">=") + " " + fmt_num(lower->value));
  } else if (upper) {
    join("t " + std::string(upper->strict ? "<" : "<=") + " " + fmt_num(upper->value));
  }
  if (eq) join("t == " + fmt_num(*eq));
  if (geom_ratio) join("in_geom(" + fmt_num(*geom_ratio) + ")");
  if (grid_step) join("in_grid(" + fmt_num(*grid_step) + ")");
  return out;
}

IntervalFn::IntervalFn(std::vector<Piece> pieces, std::vector<double> extra_breaks)
    : pieces_(std::move(pieces)), extra_breaks_(std::move(extra_breaks)) {
  if (pieces_.empty()) throw DomainCoverageError("an interval function needs at least one piece");
}

IntervalFn IntervalFn::from_pair(RealExpr lower, RealExpr upper, bool continuous,
                                 Monotone mono_lower, Monotone mono_upper) {
  Piece p;
  p.cond = Condition::everywhere();
  p.lower = std::move(lower);
  p.upper = std::move(upper);
  p.continuous = continuous;
  p.mono_lower = mono_lower;
  p.mono_upper = mono_upper;
  return IntervalFn({std::move(p)});
}

IntervalFn IntervalFn::constant(const Interval& v) {
  return from_pair(RealExpr::constant(v.lo), RealExpr::constant(v.hi), true, Monotone::Increasing,
                   Monotone::Increasing);
}

IntervalFn IntervalFn::dirichlet(const Interval& on_first, const Interval& off_first) {
  Piece p;
  p.cond = Condition::everywhere();
  p.lower = RealExpr::constant(on_first.lo);
  p.upper = RealExpr::constant(on_first.hi);
  p.continuous = false;
  const double lo = std::min(on_first.lo, off_first.lo);
  const double hi = std::max(on_first.hi, off_first.hi);
  p.oracle = [lo, hi](double, double) { return EnvelopePair{lo, hi}; };
  return IntervalFn({std::move(p)});
}

const Piece& IntervalFn::governing(double t) const {
  const Piece* last = nullptr;
  const Piece* last_eq = nullptr;
  for (const Piece& p : pieces_) {
    if (!p.cond.matches(t, cond_tol_)) continue;
    last = &p;
    if (p.cond.equality_at(t, cond_tol_)) last_eq = &p;
  }
  if (last_eq != nullptr) return *last_eq;
  if (last != nullptr) return *last;
  throw DomainCoverageError("no piece covers t = " + num(t));
}

Interval IntervalFn::eval(double t) const {
  const Piece& p = governing(t);
  const double a = p.lower(t);
  const double b = p.upper(t);
  return Interval(std::min(a, b), std::max(a, b));
}

std::vector<double> IntervalFn::breakpoints(double a, double b) const {
  std::vector<double> out;
  auto push = [&](double v) {
    if (v > a && v < b) out.push_back(v);
  };
  for (const Piece& p : pieces_) {
    if (p.cond.lower) push(p.cond.lower->value);
    if (p.cond.upper) push(p.cond.upper->value);
    if (p.cond.eq) push(*p.cond.eq);
  }
  for (double v : extra_breaks_) push(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [&](double x, double y) { return std::fabs(x - y) <= cond_tol_; }),
            out.end());
  return out;
}

bool IntervalFn::continuous_on(const TimeScale& T, double a, double b) const {
  const auto runs = T.continuous_runs(a, b);
  for (const Run& r : runs) {
    if (const auto* sc = std::get_if<ScatteredRun>(&r)) {
      if (!governing(sc->point).continuous) return false;
      continue;
    }
    const auto& seg = std::get<SegmentRun>(r);
    std::vector<double> walls = breakpoints(seg.start, seg.end);
    walls.insert(walls.begin(), seg.start);
    walls.push_back(seg.end);
    for (std::size_t i = 0; i + 1 < walls.size(); ++i) {
      if (!governing(0.5 * (walls[i] + walls[i + 1])).continuous) return false;
      if (!governing(walls[i]).continuous) return false;
    }
  }
  return true;
}

IntervalFn IntervalFn::marked_continuous(bool flag) const {
  std::vector<Piece> ps = pieces_;
  for (Piece& p : ps) p.continuous = flag;
  return IntervalFn(std::move(ps), extra_breaks_);
}

void IntervalFn::validate_ordered(const TimeScale& T, double a, double b, int samples) const {
  for (double t : grid_points(T, a, b, samples)) {
    const Piece& p = governing(t);
    const double lo = p.lower(t);
    const double hi = p.upper(t);
    if (lo > hi + 1e-12) {
      throw EvalError("inverted interval at t = " + num(t) + ": [" + num(lo) + ", " + num(hi) +
                      "]");
    }
  }
}

EnvelopePair envelope(const IntervalFn& f, const TimeScale& T, double c, double d) {
  const double cc = T.snap(c);
  const double dd = T.snap(d);
  double m = std::numeric_limits<double>::infinity();
  double M = -std::numeric_limits<double>::infinity();
  auto include_point = [&](double t) {
    const Interval v = f.eval(t);
    m = std::min(m, v.lo);
    M = std::max(M, v.hi);
  };
  for (const Run& r : T.continuous_runs(cc, dd)) {
    if (const auto* sc = std::get_if<ScatteredRun>(&r)) {
      include_point(sc->point);
      continue;
    }
    const auto& seg = std::get<SegmentRun>(r);
    std::vector<double> walls = f.breakpoints(seg.start, seg.end);
    // Pointwise values at cell-interior wall points (equality pieces live
    // there); the right end only belongs to the cell when it is not the
    // cell's own half-open boundary.
    include_point(seg.start);
    for (double w : walls) include_point(w);
    if (seg.end < dd) include_point(seg.end);
    walls.insert(walls.begin(), seg.start);
    walls.push_back(seg.end);
    for (std::size_t i = 0; i + 1 < walls.size(); ++i) {
      const double u = walls[i];
      const double v = walls[i + 1];
      const Piece& p = f.governing(0.5 * (u + v));
      if (p.oracle && v > u) {
        const EnvelopePair env = (*p.oracle)(u, v);
        m = std::min(m, env.lo);
        M = std::max(M, env.hi);
      } else {
        m = std::min(m, expr_min(p.lower, u, v, p.mono_lower));
        M = std::max(M, expr_max(p.upper, u, v, p.mono_upper));
      }
    }
  }
  return EnvelopePair{m, M};
}

IntervalFn scale(double lambda, const IntervalFn& f) {
  if (lambda == 0.0) return IntervalFn::constant(Interval(0.0, 0.0));
  std::vector<Piece> out;
  out.reserve(f.pieces().size());
  const RealExpr lam = RealExpr::constant(lambda);
  for (const Piece& p : f.pieces()) {
    Piece q;
    q.cond = p.cond;
    q.continuous = p.continuous;
    if (lambda > 0.0) {
      q.lower = lam * p.lower;
      q.upper = lam * p.upper;
      q.mono_lower = p.mono_lower;
      q.mono_upper = p.mono_upper;
      if (p.oracle) {
        q.oracle = [lambda, orc = *p.oracle](double u, double v) {
          const EnvelopePair e = orc(u, v);
          return EnvelopePair{lambda * e.lo, lambda * e.hi};
        };
      }
    } else {
      q.lower = lam * p.upper;
      q.upper = lam * p.lower;
      q.mono_lower = flip(p.mono_upper);
      q.mono_upper = flip(p.mono_lower);
      if (p.oracle) {
        q.oracle = [lambda, orc = *p.oracle](double u, double v) {
          const EnvelopePair e = orc(u, v);
          return EnvelopePair{lambda * e.hi, lambda * e.lo};
        };
      }
    }
    out.push_back(std::move(q));
  }
  std::vector<double> breaks;
  for (const Piece& p : f.pieces()) {
    if (p.cond.lower) breaks.push_back(p.cond.lower->value);
    if (p.cond.upper) breaks.push_back(p.cond.upper->value);
  }
  return IntervalFn(std::move(out), std::move(breaks));
}

namespace {

// Constants worth splitting integration cells at, harvested from both
// operands of a pointwise combination.
std::vector<double> merged_breaks(const IntervalFn& f, const IntervalFn& g) {
  std::vector<double> out;
  auto harvest = [&](const IntervalFn& fn) {
    for (const Piece& p : fn.pieces()) {
      if (p.cond.lower) out.push_back(p.cond.lower->value);
      if (p.cond.upper) out.push_back(p.cond.upper->value);
      if (p.cond.eq) out.push_back(*p.cond.eq);
    }
    const auto inherited = fn.breakpoints(-std::numeric_limits<double>::infinity(),
                                          std::numeric_limits<double>::infinity());
    out.insert(out.end(), inherited.begin(), inherited.end());
  };
  harvest(f);
  harvest(g);
  return out;
}

bool single_plain_piece(const IntervalFn& f) {
  return f.pieces().size() == 1 && f.pieces().front().cond.always &&
         !f.pieces().front().oracle.has_value();
}

}  // namespace

IntervalFn add(const IntervalFn& f, const IntervalFn& g) {
  const bool cont = all_pieces_continuous(f) && all_pieces_continuous(g);
  if (single_plain_piece(f) && single_plain_piece(g)) {
    const Piece& a = f.pieces().front();
    const Piece& b = g.pieces().front();
    return IntervalFn::from_pair(a.lower + b.lower, a.upper + b.upper, cont,
                                 combine(a.mono_lower, b.mono_lower),
                                 combine(a.mono_upper, b.mono_upper));
  }
  Piece p;
  p.cond = Condition::everywhere();
  p.continuous = cont;
  p.lower = RealExpr::apply(
      "sum_lo", [f, g](double t) { return (f.eval(t) + g.eval(t)).lo; }, RealExpr::variable());
  p.upper = RealExpr::apply(
      "sum_hi", [f, g](double t) { return (f.eval(t) + g.eval(t)).hi; }, RealExpr::variable());
  return IntervalFn({std::move(p)}, merged_breaks(f, g));
}

IntervalFn product(const IntervalFn& f, const IntervalFn& g) {
  Piece p;
  p.cond = Condition::everywhere();
  p.continuous = all_pieces_continuous(f) && all_pieces_continuous(g);
  p.lower = RealExpr::apply(
      "prod_lo", [f, g](double t) { return mul(f.eval(t), g.eval(t)).lo; }, RealExpr::variable());
  p.upper = RealExpr::apply(
      "prod_hi", [f, g](double t) { return mul(f.eval(t), g.eval(t)).hi; }, RealExpr::variable());
  return IntervalFn({std::move(p)}, merged_breaks(f, g));
}

IntervalFn power(const IntervalFn& f, double p) {
  Piece q;
  q.cond = Condition::everywhere();
  q.continuous = all_pieces_continuous(f);
  q.lower = RealExpr::apply(
      "pow_lo", [f, p](double t) { return pow(f.eval(t), p).lo; }, RealExpr::variable());
  q.upper = RealExpr::apply(
      "pow_hi", [f, p](double t) { return pow(f.eval(t), p).hi; }, RealExpr::variable());
  return IntervalFn({std::move(q)}, merged_breaks(f, f));
}

IntervalFn weight_compose(const RealExpr& h, const IntervalFn& f, const RealExpr& g) {
  const bool cont = all_pieces_continuous(f);
  if (single_plain_piece(f)) {
    const Piece& p = f.pieces().front();
    return IntervalFn::from_pair(abs(h) * p.lower.substitute(g), abs(h) * p.upper.substitute(g),
                                 cont);
  }
  Piece p;
  p.cond = Condition::everywhere();
  p.continuous = cont;
  p.lower = RealExpr::apply(
      "wcomp_lo", [h, f, g](double t) { return scalar_mul(std::fabs(h(t)), f.eval(g(t))).lo; },
      RealExpr::variable());
  p.upper = RealExpr::apply(
      "wcomp_hi", [h, f, g](double t) { return scalar_mul(std::fabs(h(t)), f.eval(g(t))).hi; },
      RealExpr::variable());
  return IntervalFn({std::move(p)});
}

}  // namespace tscalc
