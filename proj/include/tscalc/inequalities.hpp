#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tscalc/expr.hpp"
#include "tscalc/functions.hpp"
#include "tscalc/integration.hpp"
#include "tscalc/interval.hpp"
#include "tscalc/time_scale.hpp"

namespace tscalc {

enum class IneqName {
  Jensen,
  JensenConcave,
  JensenAffine,
  Holder,
  CauchySchwarz,
  Minkowski,
  HolderNegative,
  MinkowskiNegative,
};
const char* inequality_name(IneqName n);

enum class Relation { Leq, Subset, Superset, Equal };
const char* relation_name(Relation r);

// Margins measure how comfortably each endpoint comparison of the stated
// relation is satisfied; the check holds when both are >= -tolerance.
struct InequalityReport {
  IneqName name;
  Interval lhs;
  Interval rhs;
  Relation relation;
  double margin_lo;
  double margin_hi;
  bool holds;
  double tolerance;
};

enum class ConvexClass { Convex, Concave, Affine, None };
const char* convex_class_name(ConvexClass c);

struct ConvexityWitness {
  double x;
  double y;
  double alpha;
};

struct ConvexityReport {
  ConvexClass verdict;                // from the interval inclusion definition
  ConvexClass decomposition_verdict;  // from scalar shape of the endpoint functions
  std::vector<ConvexityWitness> witnesses;  // convex-inclusion violations, capped
};

// Samples grid x grid argument pairs and interior combination weights,
// keeping combinations that land in the scale (snapped); classifies f by the
// inclusion definition and, independently, by the scalar shape of its
// endpoint functions. The two verdicts agree for functions that are cleanly
// one of the classes.
ConvexityReport check_convexity(const IntervalFn& f, const TimeScale& T, double a, double b,
                                int grid = 17);

using ScalarFn = std::function<double(double)>;

struct ScalarInequalityReport {
  double lhs;
  double rhs;
  double margin;
  bool holds;
};

// Real-valued counterparts used as oracles: every interval report must be
// reproducible by applying these to the endpoint functions.
ScalarInequalityReport scalar_jensen(const ScalarFn& f, const ScalarFn& g, const ScalarFn& h,
                                     const TimeScale& T, double a, double b, double tol,
                                     bool concave = false);
ScalarInequalityReport scalar_holder(const ScalarFn& f, const ScalarFn& g, const ScalarFn& h,
                                     double p, double q, const TimeScale& T, double a, double b,
                                     double tol);
ScalarInequalityReport scalar_minkowski(const ScalarFn& f, const ScalarFn& g, const ScalarFn& h,
                                        double p, const TimeScale& T, double a, double b,
                                        double tol);

enum class JensenVariant { Convex, Concave, Affine };

// Weighted Jensen inequality for an interval-valued f applied to a scalar
// g, with weight |h|: the weighted average of f(g(s)) relates to f at the
// weighted mean of g by inclusion (convex f), reverse inclusion (concave f),
// or equality (affine f). verify_shape gates integration on a convexity
// check over the observed range of g.
InequalityReport jensen(const IntervalFn& f, const RealExpr& g, const RealExpr& h,
                        const TimeScale& T, double a, double b, double tol,
                        JensenVariant variant = JensenVariant::Convex, bool verify_shape = true,
                        int grid = 17);

InequalityReport holder(const IntervalFn& f, const IntervalFn& g, const RealExpr& h, double p,
                        std::optional<double> q, const TimeScale& T, double a, double b,
                        double tol);
InequalityReport cauchy_schwarz(const IntervalFn& f, const IntervalFn& g, const RealExpr& h,
                                const TimeScale& T, double a, double b, double tol);
InequalityReport minkowski(const IntervalFn& f, const IntervalFn& g, const RealExpr& h, double p,
                           const TimeScale& T, double a, double b, double tol);
// Variants for functions with negative values throughout: the RHS uses the
// reflected (positive) functions; Minkowski additionally requires an even
// integer exponent.
InequalityReport holder_negative(const IntervalFn& f, const IntervalFn& g, const RealExpr& h,
                                 double p, std::optional<double> q, const TimeScale& T, double a,
                                 double b, double tol);
InequalityReport minkowski_negative(const IntervalFn& f, const IntervalFn& g, const RealExpr& h,
                                    double p, const TimeScale& T, double a, double b, double tol);

}  // namespace tscalc
