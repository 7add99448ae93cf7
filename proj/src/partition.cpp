#include "tscalc/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tscalc/functions.hpp"

namespace tscalc {

Division make_fine_division(const TimeScale& T, double a, double b, double delta) {
  const double lo = T.snap(a);
  const double hi = T.snap(b);
  if (!(lo < hi)) throw EmptyRange("division range is empty");
  if (!(delta > 0.0)) throw EmptyRange("delta must be positive");

  Division d;
  d.points.push_back(lo);
  for (const Run& r : T.continuous_runs(lo, hi)) {
    if (const auto* sc = std::get_if<ScatteredRun>(&r)) {
      // One cell across the gap: either it is already narrow enough, or
      // rho(sigma(t)) == t makes it admissible.
      d.points.push_back(sc->point + sc->weight);
      continue;
    }
    const auto& seg = std::get<SegmentRun>(r);
    const double len = seg.end - seg.start;
    const int k = std::max(1, static_cast<int>(std::ceil(len / delta - 1e-12)));
    for (int i = 1; i <= k; ++i) {
      d.points.push_back(i == k ? seg.end : seg.start + (len * i) / k);
    }
  }
  return d;
}

bool validate_division(const TimeScale& T, double a, double b, const Division& d, double delta) {
  if (d.points.size() < 2) return false;
  const double lo = T.snap(a);
  const double hi = T.snap(b);
  const double tol = T.membership_tol();
  if (std::fabs(d.points.front() - lo) > tol || std::fabs(d.points.back() - hi) > tol) {
    return false;
  }
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    if (!T.contains(d.points[i])) return false;
    if (i > 0 && !(d.points[i - 1] < d.points[i])) return false;
  }
  for (std::size_t i = 1; i < d.points.size(); ++i) {
    const double prev = d.points[i - 1];
    const double cur = d.points[i];
    if (cur - prev <= delta + 1e-12) continue;
    if (std::fabs(T.rho(cur) - prev) <= tol) continue;  // cell jumps a gap
    return false;
  }
  return true;
}

Division refine(const TimeScale& T, const Division& d) {
  Division out;
  out.points.reserve(d.points.size() * 2);
  for (std::size_t i = 0; i + 1 < d.points.size(); ++i) {
    const double u = d.points[i];
    const double v = d.points[i + 1];
    out.points.push_back(u);
    if (const auto mid = T.nearest_inside(u, v, 0.5 * (u + v))) {
      out.points.push_back(*mid);
    }
  }
  out.points.push_back(d.points.back());
  return out;
}

TaggedDivision left_tagged(const Division& d) {
  TaggedDivision td;
  td.division = d;
  if (!d.points.empty()) {
    td.tags.assign(d.points.begin(), std::prev(d.points.end()));
  }
  return td;
}

Interval riemann_sum(const IntervalFn& f, const TaggedDivision& td) {
  const auto& pts = td.division.points;
  if (pts.size() < 2 || td.tags.size() != pts.size() - 1) {
    throw EmptyRange("tagged division needs one tag per cell");
  }
  Interval total(0.0, 0.0);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    total = total + scalar_mul(pts[i + 1] - pts[i], f.eval(td.tags[i]));
  }
  return total;
}

}  // namespace tscalc
