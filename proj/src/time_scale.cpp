#include "tscalc/time_scale.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tscalc {

namespace {

double component_start(const ScaleComponent& c) {
  if (const auto* seg = std::get_if<ContinuumSegment>(&c)) return seg->start;
  return std::get<DiscretePoints>(c).points.front();
}

double component_end(const ScaleComponent& c) {
  if (const auto* seg = std::get_if<ContinuumSegment>(&c)) return seg->end;
  return std::get<DiscretePoints>(c).points.back();
}

std::string num(double v) { return std::to_string(v); }

}  // namespace

TimeScale::TimeScale(std::vector<ScaleComponent> components, double membership_tol)
    : tol_(membership_tol) {
  std::vector<ContinuumSegment> segs;
  std::vector<double> pts;
  for (const auto& c : components) {
    if (const auto* seg = std::get_if<ContinuumSegment>(&c)) {
      if (!(seg->start < seg->end)) {
        throw ScaleError("segment start must be below its end: [" + num(seg->start) + ", " +
                         num(seg->end) + "]");
      }
      segs.push_back(*seg);
    } else {
      for (double p : std::get<DiscretePoints>(c).points) {
        if (!std::isfinite(p)) throw ScaleError("non-finite point in scale");
        pts.push_back(p);
      }
    }
  }
  if (segs.empty() && pts.empty()) throw ScaleError("a time scale needs at least one component");

  std::sort(segs.begin(), segs.end(),
            [](const ContinuumSegment& a, const ContinuumSegment& b) { return a.start < b.start; });
  std::vector<ContinuumSegment> merged;
  for (const auto& s : segs) {
    if (!merged.empty()) {
      ContinuumSegment& prev = merged.back();
      if (s.start < prev.end - tol_) {
        throw ScaleError("overlapping segments: [" + num(prev.start) + ", " + num(prev.end) +
                         "] and [" + num(s.start) + ", " + num(s.end) + "]");
      }
      if (s.start <= prev.end + tol_) {  // touching: merge into one segment
        prev.end = std::max(prev.end, s.end);
        continue;
      }
    }
    merged.push_back(s);
  }

  std::sort(pts.begin(), pts.end());
  std::vector<double> kept;
  for (double p : pts) {
    if (!kept.empty() && p - kept.back() <= tol_) continue;  // duplicate point
    const bool inside_segment =
        std::any_of(merged.begin(), merged.end(), [&](const ContinuumSegment& s) {
          return p >= s.start - tol_ && p <= s.end + tol_;
        });
    if (inside_segment) continue;  // already a member through the segment
    kept.push_back(p);
  }

  // Interleave merged segments and surviving points into ordered components,
  // grouping consecutive points into one DiscretePoints block.
  std::size_t si = 0, pi = 0;
  DiscretePoints pending;
  auto flush_points = [&] {
    if (!pending.points.empty()) {
      comps_.emplace_back(std::move(pending));
      pending = DiscretePoints{};
    }
  };
  while (si < merged.size() || pi < kept.size()) {
    const bool take_point =
        pi < kept.size() && (si >= merged.size() || kept[pi] < merged[si].start);
    if (take_point) {
      pending.points.push_back(kept[pi++]);
    } else {
      flush_points();
      comps_.emplace_back(merged[si++]);
    }
  }
  flush_points();
}

TimeScale TimeScale::segment(double start, double end) {
  return TimeScale({ContinuumSegment{start, end}});
}

TimeScale TimeScale::points(std::vector<double> pts) {
  if (pts.empty()) throw ScaleError("points(...) needs at least one point");
  return TimeScale({DiscretePoints{std::move(pts)}});
}

TimeScale TimeScale::hgrid(double h, double from, double to) {
  if (!(h > 0.0)) throw ScaleError("hgrid step must be positive");
  if (!(from < to)) throw ScaleError("hgrid needs from < to");
  const double count = (to - from) / h;
  const long long n = std::llrint(count);
  if (n < 1 || std::fabs(from + static_cast<double>(n) * h - to) > 1e-9 * std::max(1.0, std::fabs(to))) {
    throw ScaleError("hgrid endpoint does not lie on the grid");
  }
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (long long k = 0; k < n; ++k) pts.push_back(from + static_cast<double>(k) * h);
  pts.push_back(to);
  return TimeScale({DiscretePoints{std::move(pts)}});
}

TimeScale TimeScale::geom(double q, double from, double to) {
  if (!(q > 1.0)) throw ScaleError("geom ratio must exceed 1");
  if (!(from > 0.0)) throw ScaleError("geom needs a positive starting point");
  if (!(from <= to)) throw ScaleError("geom needs from <= to");
  std::vector<double> pts;
  for (double p = from; p <= to * (1.0 + 1e-12); p *= q) pts.push_back(p);
  return TimeScale({DiscretePoints{std::move(pts)}});
}

double TimeScale::min() const { return component_start(comps_.front()); }
double TimeScale::max() const { return component_end(comps_.back()); }

int TimeScale::locate(double t) const {
  // Last component whose start is <= t + tol.
  int lo = 0, hi = static_cast<int>(comps_.size()) - 1, best = -1;
  while (lo <= hi) {
    const int mid = (lo + hi) / 2;
    if (component_start(comps_[static_cast<std::size_t>(mid)]) <= t + tol_) {
      best = mid;
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return best;
}

std::optional<double> TimeScale::try_snap(double t) const {
  const int i = locate(t);
  if (i < 0) return std::nullopt;
  const ScaleComponent& c = comps_[static_cast<std::size_t>(i)];
  if (const auto* seg = std::get_if<ContinuumSegment>(&c)) {
    if (t < seg->start - tol_ || t > seg->end + tol_) return std::nullopt;
    if (std::fabs(t - seg->start) <= tol_) return seg->start;
    if (std::fabs(t - seg->end) <= tol_) return seg->end;
    return t;  // interior point, already a member
  }
  const auto& pts = std::get<DiscretePoints>(c).points;
  auto it = std::lower_bound(pts.begin(), pts.end(), t);
  if (it != pts.end() && std::fabs(*it - t) <= tol_) return *it;
  if (it != pts.begin() && std::fabs(*std::prev(it) - t) <= tol_) return *std::prev(it);
  return std::nullopt;
}

bool TimeScale::contains(double t) const { return try_snap(t).has_value(); }

double TimeScale::snap(double t) const {
  if (auto v = try_snap(t)) return *v;
  throw PointNotInScale("point " + num(t) + " is not in the scale");
}

double TimeScale::nearest(double t) const {
  const int i = locate(t);
  double best = 0.0;
  double best_dist = -1.0;
  auto consider = [&](double cand) {
    const double d = std::fabs(cand - t);
    if (best_dist < 0.0 || d < best_dist || (d == best_dist && cand < best)) {
      best = cand;
      best_dist = d;
    }
  };
  auto consider_component = [&](int idx) {
    if (idx < 0 || idx >= static_cast<int>(comps_.size())) return;
    const ScaleComponent& c = comps_[static_cast<std::size_t>(idx)];
    if (const auto* seg = std::get_if<ContinuumSegment>(&c)) {
      consider(std::clamp(t, seg->start, seg->end));
      return;
    }
    const auto& pts = std::get<DiscretePoints>(c).points;
    auto it = std::lower_bound(pts.begin(), pts.end(), t);
    if (it != pts.end()) consider(*it);
    if (it != pts.begin()) consider(*std::prev(it));
  };
  consider_component(i);
  consider_component(i + 1);
  if (i < 0) consider_component(0);
  return best;
}

double TimeScale::sigma(double t) const {
  const double s = snap(t);
  const int i = locate(s);
  const ScaleComponent& c = comps_[static_cast<std::size_t>(i)];
  if (const auto* seg = std::get_if<ContinuumSegment>(&c)) {
    if (s < seg->end) return s;  // right-dense inside the segment
  } else {
    const auto& pts = std::get<DiscretePoints>(c).points;
    auto it = std::lower_bound(pts.begin(), pts.end(), s);
    if (it != pts.end() && std::next(it) != pts.end()) return *std::next(it);
  }
  // Last element of this component: the successor is the next component's
  // first element, or s itself at the scale maximum.
  if (i + 1 < static_cast<int>(comps_.size())) {
    return component_start(comps_[static_cast<std::size_t>(i) + 1]);
  }
  return s;
}

double TimeScale::rho(double t) const {
  const double s = snap(t);
  const int i = locate(s);
  const ScaleComponent& c = comps_[static_cast<std::size_t>(i)];
  if (const auto* seg = std::get_if<ContinuumSegment>(&c)) {
    if (s > seg->start) return s;  // left-dense inside the segment
  } else {
    const auto& pts = std::get<DiscretePoints>(c).points;
    auto it = std::lower_bound(pts.begin(), pts.end(), s);
    if (it != pts.begin()) return *std::prev(it);
  }
  if (i > 0) return component_end(comps_[static_cast<std::size_t>(i) - 1]);
  return s;
}

PointClass TimeScale::classify(double t) const {
  const double s = snap(t);
  return PointClass{sigma(s) > s ? Side::Scattered : Side::Dense,
                    rho(s) < s ? Side::Scattered : Side::Dense};
}

std::vector<Run> TimeScale::continuous_runs(double a, double b) const {
  const double lo = snap(a);
  const double hi = snap(b);
  if (!(lo < hi)) throw EmptyRange("range [" + num(a) + ", " + num(b) + ") is empty");
  std::vector<Run> runs;
  double t = lo;
  while (t < hi) {
    const int i = locate(t);
    const ScaleComponent& c = comps_[static_cast<std::size_t>(i)];
    const auto* seg = std::get_if<ContinuumSegment>(&c);
    if (seg != nullptr && t < seg->end) {
      const double e = std::min(seg->end, hi);
      runs.push_back(SegmentRun{t, e});
      t = e;
    } else {
      const double s = sigma(t);
      runs.push_back(ScatteredRun{t, s - t});
      t = s;
    }
  }
  return runs;
}

std::vector<double> grid_points(const TimeScale& T, double a, double b, int n) {
  const double lo = T.snap(a);
  const double hi = T.snap(b);
  if (n < 2) n = 2;
  std::vector<double> pool;
  if (lo == hi) return {lo};
  double total_len = 0.0;
  const auto runs = T.continuous_runs(lo, hi);
  for (const Run& r : runs) {
    if (const auto* seg = std::get_if<SegmentRun>(&r)) total_len += seg->end - seg->start;
  }
  for (const Run& r : runs) {
    if (const auto* sc = std::get_if<ScatteredRun>(&r)) {
      pool.push_back(sc->point);
      continue;
    }
    const auto& seg = std::get<SegmentRun>(r);
    const double len = seg.end - seg.start;
    const int k = std::max(
        1, static_cast<int>(std::lround(static_cast<double>(n) * len / total_len)));
    for (int i = 0; i <= k; ++i) {
      pool.push_back(i == k ? seg.end : seg.start + (len * i) / k);
    }
  }
  pool.push_back(hi);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (static_cast<int>(pool.size()) <= n) return pool;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  const double stride = static_cast<double>(pool.size() - 1) / (n - 1);
  for (int i = 0; i < n; ++i) {
    out.push_back(pool[static_cast<std::size_t>(std::lround(i * stride))]);
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<double> TimeScale::nearest_inside(double u, double v, double target) const {
  std::optional<double> best;
  auto consider = [&](double cand) {
    if (!(cand > u && cand < v)) return;
    if (!best || std::fabs(cand - target) < std::fabs(*best - target) ||
        (std::fabs(cand - target) == std::fabs(*best - target) && cand < *best)) {
      best = cand;
    }
  };
  for (const auto& c : comps_) {
    if (component_start(c) >= v) break;
    if (component_end(c) <= u) continue;
    if (const auto* seg = std::get_if<ContinuumSegment>(&c)) {
      const double lo2 = std::max(seg->start, u);
      const double hi2 = std::min(seg->end, v);
      if (lo2 < hi2) consider(std::clamp(target, lo2, hi2));
      continue;
    }
    const auto& pts = std::get<DiscretePoints>(c).points;
    auto it = std::lower_bound(pts.begin(), pts.end(), target);
    if (it != pts.end()) consider(*it);
    if (it != pts.begin()) consider(*std::prev(it));
    // The two neighbours of `target` may fall outside (u, v); sweep the rest
    // of the in-range points as a fallback.
    auto first = std::upper_bound(pts.begin(), pts.end(), u);
    auto last = std::lower_bound(pts.begin(), pts.end(), v);
    if (first != last) {
      consider(*first);
      consider(*std::prev(last));
    }
  }
  return best;
}

}  // namespace tscalc
