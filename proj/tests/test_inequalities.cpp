#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <optional>
#include <vector>

#include "test_support.hpp"
#include "tscalc/errors.hpp"
#include "tscalc/expr.hpp"
#include "tscalc/functions.hpp"
#include "tscalc/inequalities.hpp"
#include "tscalc/interval.hpp"
#include "tscalc/time_scale.hpp"

using tscalc::ConvexClass;
using tscalc::IneqName;
using tscalc::InequalityReport;
using tscalc::Interval;
using tscalc::IntervalFn;
using tscalc::JensenVariant;
using tscalc::RealExpr;
using tscalc::Relation;
using tscalc::TimeScale;

namespace {

constexpr double kTol = 1e-8;

TimeScale segment_plus_point() {
  return TimeScale(std::vector<tscalc::ScaleComponent>{
      tscalc::ContinuumSegment{0.0, 1.0}, tscalc::DiscretePoints{{1.5}}});
}

IntervalFn sqr_sqrt_fn() {
  RealExpr s = RealExpr::variable();
  return IntervalFn::from_pair(s * s, RealExpr::constant(4.0) * sqrt(abs(s)));
}

}  // namespace

TEST_CASE("scalar mean comparison on the unit segment") {
  // f(x) = x^2, g = identity, unit weight on [0, 1]: f(mean) = 1/4 while the
  // average of f is 1/3.
  TimeScale T = TimeScale::segment(0.0, 1.0);
  auto sq = [](double x) { return x * x; };
  auto id = [](double x) { return x; };
  auto one = [](double) { return 1.0; };
  auto r = tscalc::scalar_jensen(sq, id, one, T, 0.0, 1.0, kTol);
  CHECK(r.holds);
  CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(r.rhs == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(r.margin == doctest::Approx(1.0 / 12.0).epsilon(1e-8));

  // The concave direction flips the comparison.
  auto rt = [](double x) { return std::sqrt(x); };
  auto c = tscalc::scalar_jensen(rt, id, one, T, 0.0, 1.0, kTol, true);
  CHECK(c.holds);
  CHECK(c.lhs == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(c.rhs == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("weighted mean comparison on a mixed scale reproduces closed forms") {
  // Scale [0,1] u {3/2}, f = [s^2, 4 sqrt s], g = s^2, h = e^s on [0, 3/2).
  // With m = (3e - 4)/(3e - 2): lhs = [m^2, 4 sqrt m],
  // rhs = [(19e - 48)/(3e - 2), (8 + 4e)/(3e - 2)].
  TimeScale T = segment_plus_point();
  RealExpr s = RealExpr::variable();
  IntervalFn f = sqr_sqrt_fn();
  InequalityReport rep =
      tscalc::jensen(f, s * s, exp(s), T, 0.0, 1.5, kTol, JensenVariant::Convex);
  CHECK(rep.holds);
  CHECK(rep.relation == Relation::Subset);

  const double m = (3.0 * M_E - 4.0) / (3.0 * M_E - 2.0);
  CHECK(rep.rhs.lo == doctest::Approx(m * m).epsilon(1e-8));
  CHECK(rep.rhs.hi == doctest::Approx(4.0 * std::sqrt(m)).epsilon(1e-8));
  CHECK(rep.lhs.lo ==
        doctest::Approx((19.0 * M_E - 48.0) / (3.0 * M_E - 2.0)).epsilon(1e-8));
  CHECK(rep.lhs.hi ==
        doctest::Approx((8.0 + 4.0 * M_E) / (3.0 * M_E - 2.0)).epsilon(1e-8));
  CHECK(rep.margin_lo >= 0.0);
  CHECK(rep.margin_hi >= 0.0);
}

TEST_CASE("affine integrands give equality within tolerance") {
  TimeScale T = TimeScale::segment(0.0, 2.0);
  RealExpr s = RealExpr::variable();
  // f(x) = [2x + 1, 2x + 3] is affine and nonnegative on the observed range.
  RealExpr two_x = RealExpr::constant(2.0) * s;
  IntervalFn f = IntervalFn::from_pair(two_x + RealExpr::constant(1.0),
                                       two_x + RealExpr::constant(3.0));
  InequalityReport rep = tscalc::jensen(f, s, RealExpr::constant(1.0), T, 0.0,
                                        2.0, kTol, JensenVariant::Affine);
  CHECK(rep.holds);
  CHECK(rep.relation == Relation::Equal);
  CHECK(std::fabs(rep.lhs.lo - rep.rhs.lo) <= 100 * kTol);
  CHECK(std::fabs(rep.lhs.hi - rep.rhs.hi) <= 100 * kTol);
}

TEST_CASE("concave integrands reverse the inclusion") {
  TimeScale T = TimeScale::segment(0.25, 1.0);
  RealExpr s = RealExpr::variable();
  // f(x) = [sqrt x, x^2 + 2]: lower endpoint concave, upper convex, which is
  // the concave arrangement for interval inclusion.
  IntervalFn f = IntervalFn::from_pair(sqrt(s), s * s + RealExpr::constant(2.0));
  InequalityReport rep = tscalc::jensen(f, s, RealExpr::constant(1.0), T, 0.25,
                                        1.0, kTol, JensenVariant::Concave);
  CHECK(rep.holds);
  CHECK(rep.relation == Relation::Superset);
  // Hand-computed weighted pieces: mean = 0.625, average of f on [1/4, 1]
  // = (1/0.75) * [2/3 * (1 - 1/8), 21/64 + 3/2].
  CHECK(rep.rhs.lo == doctest::Approx(std::sqrt(0.625)).epsilon(1e-8));
  CHECK(rep.rhs.hi == doctest::Approx(0.625 * 0.625 + 2.0).epsilon(1e-8));
  CHECK(rep.lhs.lo == doctest::Approx((2.0 / 3.0) * (1.0 - 0.125) / 0.75).epsilon(1e-8));
  CHECK(rep.lhs.hi == doctest::Approx((21.0 / 64.0 + 1.5) / 0.75).epsilon(1e-8));
}

TEST_CASE("mean comparison rejects a non-convex shape") {
  // f = [4 sqrt s, 4 sqrt s + 1]: the lower endpoint is concave, so the
  // convex variant must refuse rather than report a bogus inclusion.
  TimeScale T = TimeScale::segment(0.25, 1.0);
  RealExpr s = RealExpr::variable();
  RealExpr r4 = RealExpr::constant(4.0) * sqrt(s);
  IntervalFn f = IntervalFn::from_pair(r4, r4 + RealExpr::constant(1.0));
  CHECK_THROWS_AS(tscalc::jensen(f, s, RealExpr::constant(1.0), T, 0.25, 1.0,
                                 kTol, JensenVariant::Convex),
                  tscalc::NotConvex);
}

TEST_CASE("degenerate weights are reported rather than divided by") {
  TimeScale T = TimeScale::segment(0.0, 1.0);
  RealExpr s = RealExpr::variable();
  IntervalFn f = sqr_sqrt_fn();
  CHECK_THROWS_AS(tscalc::jensen(f, s, RealExpr::constant(0.0), T, 0.0, 1.0,
                                 kTol, JensenVariant::Convex),
                  tscalc::WeightDegenerate);
}

TEST_CASE("constant scalar maps collapse the mean comparison to equality") {
  TimeScale T = segment_plus_point();
  RealExpr s = RealExpr::variable();
  IntervalFn f = sqr_sqrt_fn();
  InequalityReport rep =
      tscalc::jensen(f, RealExpr::constant(0.75), exp(s), T, 0.0, 1.5, kTol,
                     JensenVariant::Convex);
  CHECK(rep.holds);
  CHECK(std::fabs(rep.lhs.lo - rep.rhs.lo) <= 100 * kTol);
  CHECK(std::fabs(rep.lhs.hi - rep.rhs.hi) <= 100 * kTol);
}

TEST_CASE("product-of-powers bound reproduces the trigonometric closed forms") {
  // [0, pi/2], f = [s, s+1], g = [sin s, s], h = s, p = q = 2.
  const double half_pi = 1.5707963267948966;
  TimeScale T = TimeScale::segment(0.0, half_pi);
  RealExpr s = RealExpr::variable();
  IntervalFn f = IntervalFn::from_pair(s, s + RealExpr::constant(1.0));
  IntervalFn g = IntervalFn::from_pair(sin(s), s);
  InequalityReport rep = tscalc::cauchy_schwarz(f, g, s, T, 0.0, half_pi, kTol);
  CHECK(rep.holds);
  CHECK(rep.relation == Relation::Leq);
  const double pi = M_PI;
  CHECK(rep.lhs.lo == doctest::Approx(pi - 2.0).epsilon(1e-8));
  CHECK(rep.lhs.hi ==
        doctest::Approx(std::pow(pi, 4) / 64.0 + std::pow(pi, 3) / 24.0)
            .epsilon(1e-8));
  CHECK(rep.rhs.lo ==
        doctest::Approx(std::sqrt(std::pow(pi, 6) / 1024.0 + std::pow(pi, 4) / 256.0))
            .epsilon(1e-8));
  CHECK(rep.rhs.hi ==
        doctest::Approx(std::sqrt(std::pow(pi, 8) / 4096.0 +
                                  std::pow(pi, 7) / 768.0 + std::pow(pi, 6) / 512.0))
            .epsilon(1e-8));
}

TEST_CASE("discrete product bound attains equality at the lower endpoint") {
  // {0,1,2,3}, f = [s, s+1], g = [s/2, s], h = s: lhs [4.5, 14],
  // rhs [4.5, 3 sqrt 22]; the lower margins vanish exactly.
  TimeScale T = TimeScale::points({0.0, 1.0, 2.0, 3.0});
  RealExpr s = RealExpr::variable();
  IntervalFn f = IntervalFn::from_pair(s, s + RealExpr::constant(1.0));
  IntervalFn g = IntervalFn::from_pair(s / RealExpr::constant(2.0), s);
  InequalityReport rep = tscalc::cauchy_schwarz(f, g, s, T, 0.0, 3.0, 1e-10);
  CHECK(rep.holds);
  CHECK(rep.lhs.lo == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(rep.lhs.hi == doctest::Approx(14.0).epsilon(1e-12));
  CHECK(rep.rhs.hi == doctest::Approx(3.0 * std::sqrt(22.0)).epsilon(1e-12));
  CHECK(rep.margin_lo == 0.0);
}

TEST_CASE("general exponents accept a conjugate pair and reject others") {
  TimeScale T = TimeScale::points({0.0, 1.0, 2.0, 3.0});
  RealExpr s = RealExpr::variable();
  IntervalFn f = IntervalFn::from_pair(s, s + RealExpr::constant(1.0));
  IntervalFn g = IntervalFn::from_pair(s / RealExpr::constant(2.0), s);

  InequalityReport r3 =
      tscalc::holder(f, g, s, 3.0, std::nullopt, T, 0.0, 3.0, kTol);
  CHECK(r3.holds);
  CHECK(r3.name == IneqName::Holder);

  InequalityReport rexp =
      tscalc::holder(f, g, s, 1.5, 3.0, T, 0.0, 3.0, kTol);
  CHECK(rexp.holds);

  CHECK_THROWS_AS(tscalc::holder(f, g, s, 1.0, std::nullopt, T, 0.0, 3.0, kTol),
                  tscalc::ExponentError);
  CHECK_THROWS_AS(tscalc::holder(f, g, s, 2.0, 3.0, T, 0.0, 3.0, kTol),
                  tscalc::ExponentError);
  CHECK_THROWS_AS(tscalc::holder(f, g, s, 0.5, std::nullopt, T, 0.0, 3.0, kTol),
                  tscalc::ExponentError);
}

TEST_CASE("conjugate pair p = q = 2 agrees with the dedicated square-root form") {
  TimeScale T = segment_plus_point();
  RealExpr s = RealExpr::variable();
  IntervalFn f = IntervalFn::from_pair(s, s + RealExpr::constant(1.0));
  IntervalFn g = IntervalFn::from_pair(s * s, s * s + RealExpr::constant(0.5));
  InequalityReport a = tscalc::holder(f, g, s, 2.0, 2.0, T, 0.0, 1.5, kTol);
  InequalityReport b = tscalc::cauchy_schwarz(f, g, s, T, 0.0, 1.5, kTol);
  CHECK(a.holds);
  CHECK(b.holds);
  CHECK(a.lhs.lo == doctest::Approx(b.lhs.lo).epsilon(1e-12));
  CHECK(a.lhs.hi == doctest::Approx(b.lhs.hi).epsilon(1e-12));
  CHECK(a.rhs.lo == doctest::Approx(b.rhs.lo).epsilon(1e-10));
  CHECK(a.rhs.hi == doctest::Approx(b.rhs.hi).epsilon(1e-10));
}

TEST_CASE("sum-of-roots bound reproduces the mixed-scale closed form") {
  // [0,1] u {2}, f = [s, 2s], g = [s, e^s], h = s, p = 2.
  TimeScale T(std::vector<tscalc::ScaleComponent>{
      tscalc::ContinuumSegment{0.0, 1.0}, tscalc::DiscretePoints{{2.0}}});
  RealExpr s = RealExpr::variable();
  IntervalFn f = IntervalFn::from_pair(s, RealExpr::constant(2.0) * s);
  IntervalFn g = IntervalFn::from_pair(s, exp(s));
  InequalityReport rep = tscalc::minkowski(f, g, s, 2.0, T, 0.0, 2.0, kTol);
  CHECK(rep.holds);
  CHECK(rep.relation == Relation::Leq);
  CHECK(rep.name == IneqName::Minkowski);
  CHECK(rep.lhs.lo == doctest::Approx(std::sqrt(5.0)).epsilon(1e-8));
  CHECK(rep.margin_lo >= 0.0);
  CHECK(rep.margin_hi >= 0.0);
}

TEST_CASE("identical summands make the sum-of-roots bound an equality") {
  TimeScale T = segment_plus_point();
  RealExpr s = RealExpr::variable();
  IntervalFn f = IntervalFn::from_pair(s, s + RealExpr::constant(1.0));
  InequalityReport rep = tscalc::minkowski(f, f, s, 2.0, T, 0.0, 1.5, kTol);
  CHECK(rep.holds);
  // lhs = ||2f|| = 2||f|| = rhs, so both margins sit at zero.
  CHECK(std::fabs(rep.margin_lo) <= 100 * kTol);
  CHECK(std::fabs(rep.margin_hi) <= 100 * kTol);
}

TEST_CASE("sign preconditions are enforced") {
  TimeScale T = TimeScale::segment(0.0, 1.0);
  RealExpr s = RealExpr::variable();
  IntervalFn neg = IntervalFn::from_pair(s - RealExpr::constant(2.0),
                                         s - RealExpr::constant(1.0));
  IntervalFn pos = IntervalFn::from_pair(s, s + RealExpr::constant(1.0));
  CHECK_THROWS_AS(
      tscalc::holder(neg, pos, s, 2.0, std::nullopt, T, 0.0, 1.0, kTol),
      tscalc::SignPreconditionError);
  CHECK_THROWS_AS(tscalc::minkowski(neg, pos, s, 2.0, T, 0.0, 1.0, kTol),
                  tscalc::SignPreconditionError);
  // The negative variants reject positive input symmetrically.
  CHECK_THROWS_AS(tscalc::holder_negative(pos, neg, s, 2.0, std::nullopt, T,
                                          0.0, 1.0, kTol),
                  tscalc::SignPreconditionError);
}

TEST_CASE("negative-function variants hold via reflection") {
  TimeScale T = segment_plus_point();
  RealExpr s = RealExpr::variable();
  IntervalFn f = IntervalFn::from_pair(-s - RealExpr::constant(2.0),
                                       -s - RealExpr::constant(1.0));
  IntervalFn g = IntervalFn::from_pair(-exp(s), -s - RealExpr::constant(0.5));

  InequalityReport h =
      tscalc::holder_negative(f, g, s, 2.0, std::nullopt, T, 0.0, 1.5, kTol);
  CHECK(h.holds);
  CHECK(h.name == IneqName::HolderNegative);
  CHECK(h.relation == Relation::Leq);

  InequalityReport m = tscalc::minkowski_negative(f, g, s, 2.0, T, 0.0, 1.5, kTol);
  CHECK(m.holds);
  CHECK(m.name == IneqName::MinkowskiNegative);

  // An odd exponent cannot work for the negative sum-of-roots bound.
  CHECK_THROWS_AS(tscalc::minkowski_negative(f, g, s, 3.0, T, 0.0, 1.5, kTol),
                  tscalc::ExponentError);
}

TEST_CASE("reflection agreement: negative variants match reflected positives") {
  TimeScale T = segment_plus_point();
  RealExpr s = RealExpr::variable();
  IntervalFn f = IntervalFn::from_pair(-s - RealExpr::constant(2.0),
                                       -s - RealExpr::constant(1.0));
  IntervalFn g = IntervalFn::from_pair(-exp(s), -s - RealExpr::constant(0.5));
  IntervalFn rf = tscalc::scale(-1.0, f);
  IntervalFn rg = tscalc::scale(-1.0, g);

  InequalityReport nh =
      tscalc::holder_negative(f, g, s, 2.0, std::nullopt, T, 0.0, 1.5, kTol);
  InequalityReport ph =
      tscalc::holder(rf, rg, s, 2.0, std::nullopt, T, 0.0, 1.5, kTol);
  CHECK(nh.rhs.lo == doctest::Approx(ph.rhs.lo).epsilon(1e-10));
  CHECK(nh.rhs.hi == doctest::Approx(ph.rhs.hi).epsilon(1e-10));
}

TEST_CASE("interval reports decompose into the scalar oracles") {
  // The endpoints of every interval report must be reproducible by running
  // the scalar form of the bound on the corresponding endpoint functions.
  TimeScale T = segment_plus_point();
  RealExpr s = RealExpr::variable();
  IntervalFn f = IntervalFn::from_pair(s, s + RealExpr::constant(1.0));
  IntervalFn g = IntervalFn::from_pair(s * s, s * s + RealExpr::constant(0.5));

  InequalityReport rep = tscalc::cauchy_schwarz(f, g, s, T, 0.0, 1.5, kTol);
  auto flo = [&](double x) { return f.eval(x).lo; };
  auto fhi = [&](double x) { return f.eval(x).hi; };
  auto glo = [&](double x) { return g.eval(x).lo; };
  auto ghi = [&](double x) { return g.eval(x).hi; };
  auto w = [](double x) { return x; };
  auto lo = tscalc::scalar_holder(flo, glo, w, 2.0, 2.0, T, 0.0, 1.5, kTol);
  auto hi = tscalc::scalar_holder(fhi, ghi, w, 2.0, 2.0, T, 0.0, 1.5, kTol);
  CHECK(rep.lhs.lo == doctest::Approx(lo.lhs).epsilon(1e-9));
  CHECK(rep.lhs.hi == doctest::Approx(hi.lhs).epsilon(1e-9));
  CHECK(rep.rhs.lo == doctest::Approx(lo.rhs).epsilon(1e-9));
  CHECK(rep.rhs.hi == doctest::Approx(hi.rhs).epsilon(1e-9));
  CHECK(lo.holds);
  CHECK(hi.holds);

  InequalityReport mk = tscalc::minkowski(f, g, s, 2.0, T, 0.0, 1.5, kTol);
  auto mlo = tscalc::scalar_minkowski(flo, glo, w, 2.0, T, 0.0, 1.5, kTol);
  auto mhi = tscalc::scalar_minkowski(fhi, ghi, w, 2.0, T, 0.0, 1.5, kTol);
  CHECK(mk.lhs.lo == doctest::Approx(mlo.lhs).epsilon(1e-9));
  CHECK(mk.lhs.hi == doctest::Approx(mhi.lhs).epsilon(1e-9));
  CHECK(mk.rhs.lo == doctest::Approx(mlo.rhs).epsilon(1e-9));
  CHECK(mk.rhs.hi == doctest::Approx(mhi.rhs).epsilon(1e-9));
}

TEST_CASE("random positive instances always satisfy the bounds") {
  testsupport::Rng rng(20240906);
  for (int i = 0; i < 40; ++i) {
    TimeScale T = testsupport::random_scale(rng);
    double a = T.min();
    double b = T.max();
    double mid = (a + b) / 2;
    IntervalFn f = testsupport::random_bounded_positive_fn(rng, mid);
    IntervalFn g = testsupport::random_bounded_positive_fn(rng, mid);
    RealExpr h = testsupport::random_bounded_positive_expr(rng, mid);

    InequalityReport cs = tscalc::cauchy_schwarz(f, g, h, T, a, b, kTol);
    CHECK(cs.holds);
    InequalityReport hd = tscalc::holder(f, g, h, 3.0, std::nullopt, T, a, b, kTol);
    CHECK(hd.holds);
    InequalityReport mk = tscalc::minkowski(f, g, h, 2.0, T, a, b, kTol);
    CHECK(mk.holds);
  }
}

TEST_CASE("shape classification separates the three clean classes") {
  TimeScale T = TimeScale::segment(0.0, 1.0);
  RealExpr s = RealExpr::variable();

  // Convex interval function: lower endpoint convex, upper concave.
  IntervalFn cvx = IntervalFn::from_pair(s * s, RealExpr::constant(3.0) - s * s);
  auto rc = tscalc::check_convexity(cvx, T, 0.0, 1.0);
  CHECK(rc.verdict == ConvexClass::Convex);
  CHECK(rc.decomposition_verdict == ConvexClass::Convex);
  CHECK(rc.witnesses.empty());

  // Concave interval function: the reverse arrangement.
  IntervalFn ccv = IntervalFn::from_pair(-(s * s), s * s + RealExpr::constant(1.0));
  auto rv = tscalc::check_convexity(ccv, T, 0.0, 1.0);
  CHECK(rv.verdict == ConvexClass::Concave);
  CHECK(rv.decomposition_verdict == ConvexClass::Concave);

  // Affine endpoints are both.
  IntervalFn aff = IntervalFn::from_pair(s, RealExpr::constant(2.0) * s +
                                                RealExpr::constant(1.0));
  auto ra = tscalc::check_convexity(aff, T, 0.0, 1.0);
  CHECK(ra.verdict == ConvexClass::Affine);
  CHECK(ra.decomposition_verdict == ConvexClass::Affine);

  // A genuinely mixed shape is neither, and produces witnesses.
  IntervalFn none = IntervalFn::from_pair(
      RealExpr::constant(4.0) * sqrt(abs(s)),
      RealExpr::constant(4.0) * sqrt(abs(s)) + RealExpr::constant(1.0));
  auto rn = tscalc::check_convexity(none, T, 0.0, 1.0);
  CHECK(rn.verdict == ConvexClass::None);
  CHECK(rn.decomposition_verdict == ConvexClass::None);
  CHECK(!rn.witnesses.empty());
}

TEST_CASE("shape classification matches the decomposition on random shapes") {
  testsupport::Rng rng(20240907);
  TimeScale T = TimeScale::segment(0.0, 1.0);
  RealExpr s = RealExpr::variable();
  for (int i = 0; i < 30; ++i) {
    // Random convex parabola pairs: a(x - c)^2 + d with a > 0 below, concave
    // mirror above; the inclusion verdict must match the endpoint shapes.
    double a1 = testsupport::urand(rng, 0.2, 3.0);
    double c1 = testsupport::urand(rng, 0.0, 1.0);
    double d1 = testsupport::urand(rng, -1.0, 1.0);
    double a2 = testsupport::urand(rng, 0.2, 3.0);
    double c2 = testsupport::urand(rng, 0.0, 1.0);
    RealExpr lo = RealExpr::constant(a1) * (s - RealExpr::constant(c1)) *
                      (s - RealExpr::constant(c1)) +
                  RealExpr::constant(d1);
    RealExpr hi = RealExpr::constant(d1) + RealExpr::constant(8.0) -
                  RealExpr::constant(a2) * (s - RealExpr::constant(c2)) *
                      (s - RealExpr::constant(c2));
    IntervalFn f = IntervalFn::from_pair(lo, hi);
    auto rep = tscalc::check_convexity(f, T, 0.0, 1.0);
    CHECK(rep.verdict == ConvexClass::Convex);
    CHECK(rep.verdict == rep.decomposition_verdict);
  }
}

TEST_CASE("names and relations map to their wire strings") {
  CHECK(std::string(tscalc::inequality_name(IneqName::Jensen)) == "jensen");
  CHECK(std::string(tscalc::inequality_name(IneqName::JensenConcave)) ==
        "jensen-concave");
  CHECK(std::string(tscalc::inequality_name(IneqName::JensenAffine)) ==
        "jensen-affine");
  CHECK(std::string(tscalc::inequality_name(IneqName::Holder)) == "holder");
  CHECK(std::string(tscalc::inequality_name(IneqName::CauchySchwarz)) ==
        "cauchy-schwarz");
  CHECK(std::string(tscalc::inequality_name(IneqName::Minkowski)) == "minkowski");
  CHECK(std::string(tscalc::inequality_name(IneqName::HolderNegative)) ==
        "holder-negative");
  CHECK(std::string(tscalc::inequality_name(IneqName::MinkowskiNegative)) ==
        "minkowski-negative");
  CHECK(std::string(tscalc::relation_name(Relation::Leq)) == "leq");
  CHECK(std::string(tscalc::relation_name(Relation::Subset)) == "subset");
  CHECK(std::string(tscalc::relation_name(Relation::Superset)) == "superset");
  CHECK(std::string(tscalc::relation_name(Relation::Equal)) == "equal");
}
