#pragma once

#include <vector>

#include "tscalc/interval.hpp"
#include "tscalc/time_scale.hpp"

namespace tscalc {

class IntervalFn;

// Strictly increasing scale members t0 < t1 < ... < tn spanning [t0, tn].
struct Division {
  std::vector<double> points;
};

// A division plus one tag per cell, each tag a scale member of [t(i-1), t(i)).
struct TaggedDivision {
  Division division;
  std::vector<double> tags;
};

// Builds a division of [a, b]_T in which every cell either has width <= delta
// or jumps a gap of the scale (its right end's backward jump returns the left
// end). Within continuum stretches cells are uniform of width <= delta.
Division make_fine_division(const TimeScale& T, double a, double b, double delta);

// Checks membership, ordering, the [a, b] span, and the width-or-gap property
// of every cell.
bool validate_division(const TimeScale& T, double a, double b, const Division& d, double delta);

// Splits every splittable cell at the scale member nearest the cell midpoint,
// strictly inside the cell. Cells whose interior contains no member (pure
// jumps) survive unchanged. The result refines the input (supersets its
// points) and never invalidates the width-or-gap property.
Division refine(const TimeScale& T, const Division& d);

// Left endpoints as tags.
TaggedDivision left_tagged(const Division& d);

// Sum of width * f(tag) over cells, accumulated left to right.
Interval riemann_sum(const IntervalFn& f, const TaggedDivision& td);

}  // namespace tscalc
