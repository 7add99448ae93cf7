#include "tscalc/integration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tscalc {

namespace {

struct SimpsonAcc {
  double err = 0.0;
  long panels = 0;
  bool depth_capped = false;
};

constexpr int kMaxDepth = 40;

double simpson_rec(const std::function<double(double)>& f, double a, double fa, double b,
                   double fb, double m, double fm, double whole, double tol, int depth,
                   SimpsonAcc& acc) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth >= kMaxDepth || std::fabs(delta) <= 15.0 * tol) {
    if (depth >= kMaxDepth && std::fabs(delta) > 15.0 * tol) acc.depth_capped = true;
    acc.err += std::fabs(delta) / 15.0;
    acc.panels += 2;
    return left + right + delta / 15.0;
  }
  return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, acc) +
         simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, acc);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        SimpsonAcc& acc) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, 0, acc);
}

// Sub-stretches of the continuum runs of [a, b)_T, split at the given
// breakpoints; `n_stretches` lets callers budget tolerance evenly.
struct Stretch {
  double start;
  double end;
};

std::vector<Stretch> continuum_stretches(const std::vector<Run>& runs,
                                         std::span<const double> breakpoints) {
  std::vector<Stretch> out;
  for (const Run& r : runs) {
    const auto* seg = std::get_if<SegmentRun>(&r);
    if (seg == nullptr) continue;
    double cur = seg->start;
    for (double bp : breakpoints) {
      if (bp > cur && bp < seg->end) {
        out.push_back(Stretch{cur, bp});
        cur = bp;
      }
    }
    out.push_back(Stretch{cur, seg->end});
  }
  return out;
}

}  // namespace

const char* method_name(IntegralMethod m) {
  switch (m) {
    case IntegralMethod::ExactDiscrete:
      return "exact-discrete";
    case IntegralMethod::Quadrature:
      return "quadrature";
    case IntegralMethod::DarbouxRefinement:
      return "darboux-refinement";
  }
  return "unknown";
}

DarbouxBounds darboux_sums(const IntervalFn& f, const TimeScale& T, const Division& d) {
  if (d.points.size() < 2) throw EmptyRange("division needs at least one cell");
  DarbouxBounds out;
  out.division = d;
  out.cell_bounds.reserve(d.points.size() - 1);
  out.lower_sum = 0.0;
  out.upper_sum = 0.0;
  for (std::size_t i = 0; i + 1 < d.points.size(); ++i) {
    const EnvelopePair env = envelope(f, T, d.points[i], d.points[i + 1]);
    const double w = d.points[i + 1] - d.points[i];
    out.cell_bounds.push_back(env);
    out.lower_sum += w * env.lo;
    out.upper_sum += w * env.hi;
  }
  return out;
}

ScalarIntegral scalar_delta_integral(const std::function<double(double)>& g, const TimeScale& T,
                                     double a, double b, double tol,
                                     std::span<const double> breakpoints) {
  const double lo = T.snap(a);
  const double hi = T.snap(b);
  if (!(lo < hi)) throw EmptyRange("integration range is empty");
  const auto runs = T.continuous_runs(lo, hi);

  ScalarIntegral out{0.0, 0.0, 0};
  for (const Run& r : runs) {
    if (const auto* sc = std::get_if<ScatteredRun>(&r)) {
      out.value += g(sc->point) * sc->weight;
      out.cells += 1;
    }
  }

  const auto stretches = continuum_stretches(runs, breakpoints);
  if (stretches.empty()) return out;
  const double budget = std::max(tol, 1e-300) / static_cast<double>(stretches.size());
  SimpsonAcc acc;
  for (const Stretch& s : stretches) {
    out.value += adaptive_simpson(g, s.start, s.end, budget, acc);
  }
  out.error_estimate = acc.err;
  out.cells += acc.panels;
  if (acc.depth_capped && acc.err > tol) {
    throw NonConvergence("quadrature did not reach the requested tolerance",
                         Interval::point(out.value), acc.err);
  }
  return out;
}

namespace {

// Quadrature of one endpoint of f over [a, b)_T, evaluating each continuum
// sub-stretch through the piece that governs its interior so endpoint values
// of neighbouring pieces cannot leak in.
ScalarIntegral integrate_endpoint(const IntervalFn& f, bool upper_endpoint, const TimeScale& T,
                                  double a, double b, double tol) {
  const auto runs = T.continuous_runs(a, b);
  ScalarIntegral out{0.0, 0.0, 0};
  for (const Run& r : runs) {
    if (const auto* sc = std::get_if<ScatteredRun>(&r)) {
      const Interval v = f.eval(sc->point);
      out.value += (upper_endpoint ? v.hi : v.lo) * sc->weight;
      out.cells += 1;
    }
  }
  const auto breaks = f.breakpoints(a, b);
  const auto stretches = continuum_stretches(runs, breaks);
  if (stretches.empty()) return out;
  const double budget = std::max(tol, 1e-300) / static_cast<double>(stretches.size());
  SimpsonAcc acc;
  for (const Stretch& s : stretches) {
    const Piece& p = f.governing(0.5 * (s.start + s.end));
    const RealExpr& e = upper_endpoint ? p.upper : p.lower;
    out.value += adaptive_simpson([&](double x) { return e(x); }, s.start, s.end, budget, acc);
  }
  out.error_estimate = acc.err;
  out.cells += acc.panels;
  if (acc.depth_capped && acc.err > tol) {
    throw NonConvergence("quadrature did not reach the requested tolerance",
                         Interval::point(out.value), acc.err);
  }
  return out;
}

bool purely_discrete(const std::vector<Run>& runs) {
  return std::none_of(runs.begin(), runs.end(),
                      [](const Run& r) { return std::holds_alternative<SegmentRun>(r); });
}

IntegralResult exact_discrete_sum(const IntervalFn& f, const std::vector<Run>& runs) {
  double lo = 0.0;
  double hi = 0.0;
  long cells = 0;
  for (const Run& r : runs) {
    const auto& sc = std::get<ScatteredRun>(r);
    const Interval v = f.eval(sc.point);
    lo += v.lo * sc.weight;
    hi += v.hi * sc.weight;
    cells += 1;
  }
  return IntegralResult{Interval(lo, hi), IntegralMethod::ExactDiscrete, 0.0, cells};
}

}  // namespace

IntegralResult id_integral(const IntervalFn& f, const TimeScale& T, double a, double b,
                           double tol) {
  const double lo = T.snap(a);
  const double hi = T.snap(b);
  if (!(lo < hi)) throw EmptyRange("integration range is empty");
  const auto runs = T.continuous_runs(lo, hi);
  if (purely_discrete(runs)) return exact_discrete_sum(f, runs);

  if (f.continuous_on(T, lo, hi)) {
    const ScalarIntegral l = integrate_endpoint(f, false, T, lo, hi, tol);
    const ScalarIntegral u = integrate_endpoint(f, true, T, lo, hi, tol);
    return IntegralResult{Interval(std::min(l.value, u.value), std::max(l.value, u.value)),
                          IntegralMethod::Quadrature, std::max(l.error_estimate, u.error_estimate),
                          std::max(l.cells, u.cells)};
  }

  // Each refinement round can double the division, so a cell budget keeps a
  // non-settling envelope from exhausting memory before the round cap hits.
  constexpr long kMaxRefineCells = 1L << 16;
  Division d = make_fine_division(T, lo, hi, (hi - lo) / 8.0);
  DarbouxBounds cur = darboux_sums(f, T, d);
  double change = std::numeric_limits<double>::infinity();
  for (int round = 1; round <= 24; ++round) {
    if (static_cast<long>(d.points.size()) - 1 >= kMaxRefineCells) {
      throw NonConvergence("darboux refinement exceeded the cell budget before settling",
                           Interval(cur.lower_sum, cur.upper_sum), change);
    }
    d = refine(T, d);
    const DarbouxBounds next = darboux_sums(f, T, d);
    change = std::max(std::fabs(next.lower_sum - cur.lower_sum),
                      std::fabs(next.upper_sum - cur.upper_sum));
    cur = next;
    if (change < tol) {
      return IntegralResult{Interval(cur.lower_sum, cur.upper_sum),
                            IntegralMethod::DarbouxRefinement, change,
                            static_cast<long>(cur.division.points.size()) - 1};
    }
  }
  throw NonConvergence("darboux refinement did not settle within 24 rounds",
                       Interval(cur.lower_sum, cur.upper_sum), change);
}

IntegralResult ir_integral(const IntervalFn& f, const TimeScale& T, double a, double b,
                           double tol) {
  const double lo = T.snap(a);
  const double hi = T.snap(b);
  if (!(lo < hi)) throw EmptyRange("integration range is empty");
  const auto runs = T.continuous_runs(lo, hi);
  if (purely_discrete(runs)) return exact_discrete_sum(f, runs);
  if (!f.continuous_on(T, lo, hi)) {
    throw NotContinuous("the integrand is not declared continuous on the range");
  }
  const ScalarIntegral l = integrate_endpoint(f, false, T, lo, hi, tol);
  const ScalarIntegral u = integrate_endpoint(f, true, T, lo, hi, tol);
  return IntegralResult{Interval(std::min(l.value, u.value), std::max(l.value, u.value)),
                        IntegralMethod::Quadrature, std::max(l.error_estimate, u.error_estimate),
                        std::max(l.cells, u.cells)};
}

}  // namespace tscalc
