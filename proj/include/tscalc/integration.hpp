#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tscalc/functions.hpp"
#include "tscalc/interval.hpp"
#include "tscalc/partition.hpp"
#include "tscalc/time_scale.hpp"

namespace tscalc {

enum class IntegralMethod { ExactDiscrete, Quadrature, DarbouxRefinement };
const char* method_name(IntegralMethod m);

struct IntegralResult {
  Interval value;
  IntegralMethod method;
  double error_estimate;
  long cells_used;
};

struct ScalarIntegral {
  double value;
  double error_estimate;
  long cells;
};

// Raised when an iterative computation exhausts its budget before reaching
// the requested tolerance; carries the best bracket seen so callers can still
// inspect the partial result.
struct NonConvergence : Error {
  Interval last_bracket;
  double last_change;

  NonConvergence(const std::string& message, Interval bracket, double change)
      : Error(message), last_bracket(bracket), last_change(change) {}
};

// Lower/upper Darboux sums of f over a division: sum of cell width times the
// cell envelope's lower (resp. upper) bound, left to right.
struct DarbouxBounds {
  Division division;
  std::vector<EnvelopePair> cell_bounds;
  double lower_sum;
  double upper_sum;
};
DarbouxBounds darboux_sums(const IntervalFn& f, const TimeScale& T, const Division& d);

// Delta integral of a scalar function: exact weighted sums at right-scattered
// points plus adaptive Simpson quadrature over continuum stretches (absolute
// budget tol split across stretches, recursion depth capped at 40).
// `breakpoints` lists argument values where the integrand may kink or jump;
// stretches are split there first.
ScalarIntegral scalar_delta_integral(const std::function<double(double)>& g, const TimeScale& T,
                                     double a, double b, double tol,
                                     std::span<const double> breakpoints = {});

// Interval Darboux delta integral over [a, b)_T. Purely discrete ranges are
// finite sums (method "exact-discrete"). When every governing piece is
// declared continuous the lower/upper Darboux integrals coincide with the
// componentwise scalar integrals, computed by quadrature (method
// "quadrature"). Otherwise the value is bracketed by iterated division
// refinement from a width-(b-a)/8 start until both sums move less than tol
// between rounds, up to 24 rounds and a 65536-cell budget (method
// "darboux-refinement"); exhausting either raises NonConvergence with the
// last bracket.
IntegralResult id_integral(const IntervalFn& f, const TimeScale& T, double a, double b,
                           double tol);

// Interval Riemann delta integral: componentwise scalar integrals of the
// endpoint functions. Requires every governing piece to be declared
// continuous (NotContinuous otherwise).
IntegralResult ir_integral(const IntervalFn& f, const TimeScale& T, double a, double b,
                           double tol);

}  // namespace tscalc
