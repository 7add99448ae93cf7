#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tscalc/errors.hpp"

namespace tscalc {

// A closed real interval [start, end] with start < end.
struct ContinuumSegment {
  double start;
  double end;
};

// A finite increasing list of isolated points.
struct DiscretePoints {
  std::vector<double> points;
};

using ScaleComponent = std::variant<ContinuumSegment, DiscretePoints>;

enum class Side { Scattered, Dense };

struct PointClass {
  Side right;
  Side left;
};

// Pieces of the decomposition of [a, b): maximal continuum sub-segments, and
// right-scattered points carrying their forward gap as weight.
struct SegmentRun {
  double start;
  double end;
};
struct ScatteredRun {
  double point;
  double weight;  // sigma(point) - point, clipped to the range end
};
using Run = std::variant<SegmentRun, ScatteredRun>;

// A nonempty closed subset of the reals built from ordered, pairwise disjoint
// components. Construction normalizes: segments sharing an endpoint merge,
// points duplicating a segment boundary (or each other) are dropped, and any
// overlap of positive measure is rejected. Membership queries snap arguments
// within `membership_tol` of a stored discrete point or segment boundary to
// the stored value.
class TimeScale {
 public:
  explicit TimeScale(std::vector<ScaleComponent> components, double membership_tol = 1e-12);

  static TimeScale segment(double start, double end);
  static TimeScale points(std::vector<double> pts);
  // from, from + h, ..., to (h > 0; to must lie on the grid within tolerance)
  static TimeScale hgrid(double h, double from, double to);
  // from, from*q, from*q^2, ..., <= to (q > 1, from > 0)
  static TimeScale geom(double q, double from, double to);

  const std::vector<ScaleComponent>& components() const { return comps_; }
  double membership_tol() const { return tol_; }
  double min() const;
  double max() const;

  bool contains(double t) const;
  std::optional<double> try_snap(double t) const;
  double snap(double t) const;  // throws PointNotInScale
  double nearest(double t) const;

  // Forward jump operator: least member > t, or t itself when t is the
  // maximum or interior to a segment. Backward jump is symmetric.
  double sigma(double t) const;
  double rho(double t) const;
  double mu(double t) const { return sigma(t) - t; }   // forward graininess
  double eta(double t) const { return t - rho(t); }    // backward graininess
  PointClass classify(double t) const;

  // Decompose [a, b) into runs; weights and segment lengths sum to b - a.
  std::vector<Run> continuous_runs(double a, double b) const;

  // Nearest member strictly inside the open interval (u, v), preferring
  // proximity to `target`; empty when (u, v) contains no member.
  std::optional<double> nearest_inside(double u, double v, double target) const;

 private:
  std::vector<ScaleComponent> comps_;
  double tol_;

  // Index of the component whose span could contain t (last component whose
  // start is <= t + tol), or -1.
  int locate(double t) const;
};

// Deterministic sample of at most n members of [a, b]_T: every discrete point
// in range plus uniform samples of each continuum segment, thinned evenly when
// the pool exceeds n. Both a and b are included.
std::vector<double> grid_points(const TimeScale& T, double a, double b, int n);

}  // namespace tscalc
