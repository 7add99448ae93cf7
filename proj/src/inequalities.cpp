#include "tscalc/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "tscalc/errors.hpp"

namespace tscalc {
namespace {

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Integrals feeding a certified margin run two orders tighter than the
// margin tolerance, so quadrature error cannot flip a verdict.
double inner_tol(double tol) { return std::max(tol / 100.0, 1e-306); }

constexpr double kSignSlack = 1e-12;  // boundary zeros are admitted
constexpr int kSignSamples = 257;

InequalityReport make_report(IneqName name, const Interval& lhs, const Interval& rhs,
                             Relation relation, double tol) {
  double mlo = 0.0;
  double mhi = 0.0;
  switch (relation) {
    case Relation::Leq:
      mlo = rhs.lo - lhs.lo;
      mhi = rhs.hi - lhs.hi;
      break;
    case Relation::Subset:
      mlo = lhs.lo - rhs.lo;
      mhi = rhs.hi - lhs.hi;
      break;
    case Relation::Superset:
      mlo = rhs.lo - lhs.lo;
      mhi = lhs.hi - rhs.hi;
      break;
    case Relation::Equal:
      mlo = -std::fabs(lhs.lo - rhs.lo);
      mhi = -std::fabs(lhs.hi - rhs.hi);
      break;
  }
  bool holds = mlo >= -tol && mhi >= -tol;
  return InequalityReport{name, lhs, rhs, relation, mlo, mhi, holds, tol};
}

void require_nonneg(const IntervalFn& f, const TimeScale& T, double a, double b,
                    const char* what) {
  for (double t : grid_points(T, a, b, kSignSamples)) {
    Interval v = f.eval(t);
    if (v.lo < -kSignSlack) {
      throw SignPreconditionError(std::string(what) + " must take nonnegative values; found " +
                                  fmt_num(v.lo) + " at t = " + fmt_num(t));
    }
  }
}

void require_nonpos(const IntervalFn& f, const TimeScale& T, double a, double b,
                    const char* what) {
  for (double t : grid_points(T, a, b, kSignSamples)) {
    Interval v = f.eval(t);
    if (v.hi > kSignSlack) {
      throw SignPreconditionError(std::string(what) + " must take nonpositive values; found " +
                                  fmt_num(v.hi) + " at t = " + fmt_num(t));
    }
  }
}

void require_nonneg_weight(const RealExpr& h, const TimeScale& T, double a, double b) {
  for (double t : grid_points(T, a, b, kSignSamples)) {
    double v = h(t);
    if (v < -kSignSlack) {
      throw SignPreconditionError(std::string("weight must be nonnegative; found ") + fmt_num(v) +
                                  " at t = " + fmt_num(t));
    }
  }
}

// Integral values that are nonnegative up to quadrature noise get their
// endpoints clamped to zero so a fractional root stays defined.
double clamp_tiny(double v) { return (v < 0.0 && v >= -1e-9) ? 0.0 : v; }

Interval clamp_tiny(const Interval& v) {
  double lo = clamp_tiny(v.lo);
  double hi = clamp_tiny(v.hi);
  if (hi < lo) hi = lo;
  return Interval(lo, hi);
}

bool all_pieces_continuous(const IntervalFn& f) {
  return std::all_of(f.pieces().begin(), f.pieces().end(),
                     [](const Piece& p) { return p.continuous; });
}

// t -> clamp(f(t))^p as a function; clamping absorbs roundoff-scale negative
// endpoints that would otherwise escape a fractional power's domain.
IntervalFn pow_clamped(const IntervalFn& f, double p) {
  bool cont = all_pieces_continuous(f);
  auto lower = RealExpr::apply(
      "powc_lo", [f, p](double t) { return pow(clamp_tiny(f.eval(t)), p).lo; },
      RealExpr::variable());
  auto upper = RealExpr::apply(
      "powc_hi", [f, p](double t) { return pow(clamp_tiny(f.eval(t)), p).hi; },
      RealExpr::variable());
  std::vector<Piece> pieces;
  pieces.push_back(Piece{Condition::everywhere(), lower, upper, cont, Monotone::Unknown,
                         Monotone::Unknown, std::nullopt});
  return IntervalFn(std::move(pieces),
                    f.breakpoints(-std::numeric_limits<double>::infinity(),
                                  std::numeric_limits<double>::infinity()));
}

IntervalFn wrap_expr(const RealExpr& e) { return IntervalFn::from_pair(e, e); }

Interval frac_root(const Interval& v, double p) { return pow(clamp_tiny(v), 1.0 / p); }

void validate_conjugate(double p, const std::optional<double>& q, double& qq) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw ExponentError("exponent p must be a finite number greater than 1; got " + fmt_num(p));
  }
  qq = q ? *q : p / (p - 1.0);
  if (!(qq > 1.0) || !std::isfinite(qq) || std::fabs(1.0 / p + 1.0 / qq - 1.0) > 1e-12) {
    throw ExponentError("exponents must satisfy 1/p + 1/q = 1; got p = " + fmt_num(p) +
                        ", q = " + fmt_num(qq));
  }
}

InequalityReport holder_core(const IntervalFn& f, const IntervalFn& g, const RealExpr& h,
                             double p, std::optional<double> q, const TimeScale& T, double a,
                             double b, double tol, bool reflected) {
  double qq = 0.0;
  validate_conjugate(p, q, qq);
  require_nonneg_weight(h, T, a, b);
  IntervalFn fp_base = f;
  IntervalFn gp_base = g;
  if (reflected) {
    require_nonpos(f, T, a, b, "first factor");
    require_nonpos(g, T, a, b, "second factor");
    fp_base = scale(-1.0, f);
    gp_base = scale(-1.0, g);
  } else {
    require_nonneg(f, T, a, b, "first factor");
    require_nonneg(g, T, a, b, "second factor");
  }
  double qtol = inner_tol(tol);
  IntervalFn hw = wrap_expr(h);
  Interval lhs = ir_integral(product(hw, product(f, g)), T, a, b, qtol).value;
  Interval F = clamp_tiny(ir_integral(product(hw, pow_clamped(fp_base, p)), T, a, b, qtol).value);
  Interval G = clamp_tiny(ir_integral(product(hw, pow_clamped(gp_base, qq)), T, a, b, qtol).value);
  Interval rhs = mul(frac_root(F, p), frac_root(G, qq));
  return make_report(reflected ? IneqName::HolderNegative : IneqName::Holder, lhs, rhs,
                     Relation::Leq, tol);
}

InequalityReport minkowski_core(const IntervalFn& f, const IntervalFn& g, const RealExpr& h,
                                double p, const TimeScale& T, double a, double b, double tol,
                                IneqName name) {
  double qtol = inner_tol(tol);
  IntervalFn habs = wrap_expr(abs(h));
  IntervalFn sum = add(f, g);
  Interval SP = ir_integral(product(habs, pow_clamped(sum, p)), T, a, b, qtol).value;
  Interval FP = ir_integral(product(habs, pow_clamped(f, p)), T, a, b, qtol).value;
  Interval GP = ir_integral(product(habs, pow_clamped(g, p)), T, a, b, qtol).value;
  Interval lhs = frac_root(SP, p);
  Interval rhs = add(frac_root(FP, p), frac_root(GP, p));
  return make_report(name, lhs, rhs, Relation::Leq, tol);
}

}  // namespace

const char* inequality_name(IneqName n) {
  switch (n) {
    case IneqName::Jensen:
      return "jensen";
    case IneqName::JensenConcave:
      return "jensen-concave";
    case IneqName::JensenAffine:
      return "jensen-affine";
    case IneqName::Holder:
      return "holder";
    case IneqName::CauchySchwarz:
      return "cauchy-schwarz";
    case IneqName::Minkowski:
      return "minkowski";
    case IneqName::HolderNegative:
      return "holder-negative";
    case IneqName::MinkowskiNegative:
      return "minkowski-negative";
  }
  return "?";
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Leq:
      return "leq";
    case Relation::Subset:
      return "subset";
    case Relation::Superset:
      return "superset";
    case Relation::Equal:
      return "equal";
  }
  return "?";
}

const char* convex_class_name(ConvexClass c) {
  switch (c) {
    case ConvexClass::Convex:
      return "convex";
    case ConvexClass::Concave:
      return "concave";
    case ConvexClass::Affine:
      return "affine";
    case ConvexClass::None:
      return "none";
  }
  return "?";
}

ConvexityReport check_convexity(const IntervalFn& f, const TimeScale& T, double a, double b,
                                int grid) {
  std::vector<double> pts = grid_points(T, a, b, std::max(grid, 3));
  std::vector<double> alphas;
  int n = std::max(grid, 3);
  for (int k = 1; k <= n - 2; ++k) alphas.push_back(static_cast<double>(k) / (n - 1));

  bool conv_ok = true;
  bool conc_ok = true;
  bool lo_cx = true, lo_cv = true, hi_cx = true, hi_cv = true;
  std::vector<ConvexityWitness> witnesses;
  constexpr std::size_t kWitnessCap = 32;
  double tol = T.membership_tol();

  for (std::size_t i = 0; i < pts.size(); ++i) {
    Interval fx = f.eval(pts[i]);
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Interval fy = f.eval(pts[j]);
      double scale_mag = 1.0 + std::fabs(fx.lo) + std::fabs(fx.hi) + std::fabs(fy.lo) +
                         std::fabs(fy.hi);
      double tolC = 1e-9 * scale_mag;
      for (double alpha : alphas) {
        double z = alpha * pts[i] + (1.0 - alpha) * pts[j];
        auto zs = T.try_snap(z);
        if (!zs || *zs < a - tol || *zs > b + tol) continue;
        Interval fz = f.eval(*zs);
        Interval mix = add(scalar_mul(alpha, fx), scalar_mul(1.0 - alpha, fy));
        bool cx = fz.lo <= mix.lo + tolC && mix.hi <= fz.hi + tolC;  // mix inside fz
        bool cv = mix.lo <= fz.lo + tolC && fz.hi <= mix.hi + tolC;  // fz inside mix
        if (!cx) {
          conv_ok = false;
          if (witnesses.size() < kWitnessCap)
            witnesses.push_back(ConvexityWitness{pts[i], pts[j], alpha});
        }
        if (!cv) conc_ok = false;
        if (fz.lo > mix.lo + tolC) lo_cx = false;
        if (fz.lo < mix.lo - tolC) lo_cv = false;
        if (fz.hi > mix.hi + tolC) hi_cx = false;
        if (fz.hi < mix.hi - tolC) hi_cv = false;
      }
    }
  }

  ConvexClass verdict = ConvexClass::None;
  if (conv_ok && conc_ok)
    verdict = ConvexClass::Affine;
  else if (conv_ok)
    verdict = ConvexClass::Convex;
  else if (conc_ok)
    verdict = ConvexClass::Concave;

  bool e_cx = lo_cx && hi_cv;
  bool e_cv = lo_cv && hi_cx;
  ConvexClass endpoint = ConvexClass::None;
  if (e_cx && e_cv)
    endpoint = ConvexClass::Affine;
  else if (e_cx)
    endpoint = ConvexClass::Convex;
  else if (e_cv)
    endpoint = ConvexClass::Concave;

  return ConvexityReport{verdict, endpoint, std::move(witnesses)};
}

ScalarInequalityReport scalar_jensen(const ScalarFn& f, const ScalarFn& g, const ScalarFn& h,
                                     const TimeScale& T, double a, double b, double tol,
                                     bool concave) {
  double qtol = inner_tol(tol);
  auto weight = [&h](double t) { return std::fabs(h(t)); };
  double W = scalar_delta_integral(weight, T, a, b, qtol).value;
  if (!(W > 1e-12)) {
    throw WeightDegenerate("total weight is " + fmt_num(W) + "; the weighted mean is undefined");
  }
  double mean =
      scalar_delta_integral([&](double t) { return std::fabs(h(t)) * g(t); }, T, a, b, qtol)
          .value /
      W;
  double avg =
      scalar_delta_integral([&](double t) { return std::fabs(h(t)) * f(g(t)); }, T, a, b, qtol)
          .value /
      W;
  double lhs = f(mean);
  double rhs = avg;
  double margin = concave ? lhs - rhs : rhs - lhs;
  return ScalarInequalityReport{lhs, rhs, margin, margin >= -tol};
}

ScalarInequalityReport scalar_holder(const ScalarFn& f, const ScalarFn& g, const ScalarFn& h,
                                     double p, double q, const TimeScale& T, double a, double b,
                                     double tol) {
  double qq = 0.0;
  validate_conjugate(p, q, qq);
  double qtol = inner_tol(tol);
  double lhs =
      scalar_delta_integral([&](double t) { return h(t) * f(t) * g(t); }, T, a, b, qtol).value;
  double F = clamp_tiny(
      scalar_delta_integral([&](double t) { return h(t) * std::pow(f(t), p); }, T, a, b, qtol)
          .value);
  double G = clamp_tiny(
      scalar_delta_integral([&](double t) { return h(t) * std::pow(g(t), qq); }, T, a, b, qtol)
          .value);
  double rhs = std::pow(F, 1.0 / p) * std::pow(G, 1.0 / qq);
  double margin = rhs - lhs;
  return ScalarInequalityReport{lhs, rhs, margin, margin >= -tol};
}

ScalarInequalityReport scalar_minkowski(const ScalarFn& f, const ScalarFn& g, const ScalarFn& h,
                                        double p, const TimeScale& T, double a, double b,
                                        double tol) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw ExponentError("exponent p must be a finite number greater than 1; got " + fmt_num(p));
  }
  double qtol = inner_tol(tol);
  auto w = [&h](double t) { return std::fabs(h(t)); };
  double SP = clamp_tiny(
      scalar_delta_integral([&](double t) { return w(t) * std::pow(f(t) + g(t), p); }, T, a, b,
                            qtol)
          .value);
  double FP = clamp_tiny(
      scalar_delta_integral([&](double t) { return w(t) * std::pow(f(t), p); }, T, a, b, qtol)
          .value);
  double GP = clamp_tiny(
      scalar_delta_integral([&](double t) { return w(t) * std::pow(g(t), p); }, T, a, b, qtol)
          .value);
  double lhs = std::pow(SP, 1.0 / p);
  double rhs = std::pow(FP, 1.0 / p) + std::pow(GP, 1.0 / p);
  double margin = rhs - lhs;
  return ScalarInequalityReport{lhs, rhs, margin, margin >= -tol};
}

InequalityReport jensen(const IntervalFn& f, const RealExpr& g, const RealExpr& h,
                        const TimeScale& T, double a, double b, double tol, JensenVariant variant,
                        bool verify_shape, int grid) {
  double qtol = inner_tol(tol);
  auto weight = [&h](double t) { return std::fabs(h(t)); };
  double W = scalar_delta_integral(weight, T, a, b, qtol).value;
  if (!(W > 1e-12)) {
    throw WeightDegenerate("total weight is " + fmt_num(W) + "; the weighted mean is undefined");
  }

  // Observed range of the inner function; f is evaluated only there.
  double gmin = std::numeric_limits<double>::infinity();
  double gmax = -std::numeric_limits<double>::infinity();
  for (double t : grid_points(T, a, b, kSignSamples)) {
    double v = g(t);
    gmin = std::min(gmin, v);
    gmax = std::max(gmax, v);
  }

  bool degenerate_range = !(gmax - gmin > 1e-12);
  if (!degenerate_range) {
    TimeScale range_scale = TimeScale::segment(gmin, gmax);
    require_nonneg(f, range_scale, gmin, gmax, "outer function");
    if (verify_shape) {
      ConvexityReport shape = check_convexity(f, range_scale, gmin, gmax, grid);
      bool ok = false;
      switch (variant) {
        case JensenVariant::Convex:
          ok = shape.verdict == ConvexClass::Convex || shape.verdict == ConvexClass::Affine;
          break;
        case JensenVariant::Concave:
          ok = shape.verdict == ConvexClass::Concave || shape.verdict == ConvexClass::Affine;
          break;
        case JensenVariant::Affine:
          ok = shape.verdict == ConvexClass::Affine;
          break;
      }
      if (!ok) {
        const char* wanted = variant == JensenVariant::Convex    ? "convex"
                             : variant == JensenVariant::Concave ? "concave"
                                                                 : "affine";
        throw NotConvex(std::string("outer function must be ") + wanted + " on [" +
                        fmt_num(gmin) + ", " + fmt_num(gmax) + "]; it classifies as " +
                        convex_class_name(shape.verdict));
      }
    }
  } else if (f.eval(gmin).lo < -kSignSlack) {
    throw SignPreconditionError("outer function must take nonnegative values; found " +
                                fmt_num(f.eval(gmin).lo) + " at t = " + fmt_num(gmin));
  }

  IntervalFn integrand = weight_compose(h, f, g);
  if (verify_shape) integrand = integrand.marked_continuous();
  Interval avg = scalar_mul(1.0 / W, ir_integral(integrand, T, a, b, qtol).value);

  double mean =
      scalar_delta_integral([&](double t) { return std::fabs(h(t)) * g(t); }, T, a, b, qtol)
          .value /
      W;
  Interval at_mean = f.eval(mean);

  IneqName name = IneqName::Jensen;
  Relation rel = Relation::Subset;
  switch (variant) {
    case JensenVariant::Convex:
      name = IneqName::Jensen;
      rel = Relation::Subset;
      break;
    case JensenVariant::Concave:
      name = IneqName::JensenConcave;
      rel = Relation::Superset;
      break;
    case JensenVariant::Affine:
      name = IneqName::JensenAffine;
      rel = Relation::Equal;
      break;
  }
  return make_report(name, avg, at_mean, rel, tol);
}

InequalityReport holder(const IntervalFn& f, const IntervalFn& g, const RealExpr& h, double p,
                        std::optional<double> q, const TimeScale& T, double a, double b,
                        double tol) {
  return holder_core(f, g, h, p, q, T, a, b, tol, false);
}

InequalityReport holder_negative(const IntervalFn& f, const IntervalFn& g, const RealExpr& h,
                                 double p, std::optional<double> q, const TimeScale& T, double a,
                                 double b, double tol) {
  return holder_core(f, g, h, p, q, T, a, b, tol, true);
}

InequalityReport cauchy_schwarz(const IntervalFn& f, const IntervalFn& g, const RealExpr& h,
                                const TimeScale& T, double a, double b, double tol) {
  require_nonneg_weight(h, T, a, b);
  require_nonneg(f, T, a, b, "first factor");
  require_nonneg(g, T, a, b, "second factor");
  double qtol = inner_tol(tol);
  IntervalFn hw = wrap_expr(h);
  Interval lhs = ir_integral(product(hw, product(f, g)), T, a, b, qtol).value;
  Interval F2 = clamp_tiny(ir_integral(product(hw, pow_clamped(f, 2.0)), T, a, b, qtol).value);
  Interval G2 = clamp_tiny(ir_integral(product(hw, pow_clamped(g, 2.0)), T, a, b, qtol).value);
  Interval rhs = pow(clamp_tiny(mul(F2, G2)), 0.5);
  return make_report(IneqName::CauchySchwarz, lhs, rhs, Relation::Leq, tol);
}

InequalityReport minkowski(const IntervalFn& f, const IntervalFn& g, const RealExpr& h, double p,
                           const TimeScale& T, double a, double b, double tol) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw ExponentError("exponent p must be a finite number greater than 1; got " + fmt_num(p));
  }
  require_nonneg(f, T, a, b, "first summand");
  require_nonneg(g, T, a, b, "second summand");
  return minkowski_core(f, g, h, p, T, a, b, tol, IneqName::Minkowski);
}

InequalityReport minkowski_negative(const IntervalFn& f, const IntervalFn& g, const RealExpr& h,
                                    double p, const TimeScale& T, double a, double b,
                                    double tol) {
  bool even_integer = p > 1.0 && std::isfinite(p) && std::nearbyint(p) == p &&
                      std::llround(p) % 2 == 0;
  if (!even_integer) {
    throw ExponentError("the nonpositive variant requires an even integer exponent; got " +
                        fmt_num(p));
  }
  require_nonpos(f, T, a, b, "first summand");
  require_nonpos(g, T, a, b, "second summand");
  return minkowski_core(f, g, h, p, T, a, b, tol, IneqName::MinkowskiNegative);
}

}  // namespace tscalc
