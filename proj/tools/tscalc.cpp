#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tscalc/errors.hpp"
#include "tscalc/functions.hpp"
#include "tscalc/inequalities.hpp"
#include "tscalc/integration.hpp"
#include "tscalc/parser.hpp"
#include "tscalc/reporting.hpp"
#include "tscalc/time_scale.hpp"

namespace {

double default_tolerance() {
  if (const char* env = std::getenv("TSCALC_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && std::isfinite(v) && v > 0.0) return v;
  }
  return 1e-8;
}

const char* side_name(tscalc::Side s) {
  return s == tscalc::Side::Scattered ? "scattered" : "dense";
}

struct Options {
  std::string scale_text;
  std::string fn_text;
  std::string f_text;
  std::string g_text;
  std::string h_text;
  std::string name;
  std::string kind = "id";
  double from = 0.0;
  double to = 0.0;
  double at = 0.0;
  double tol = 1e-8;
  double p = 2.0;
  double q = 0.0;
  bool q_set = false;
  int grid = 17;
  bool json = false;
};

int run_point(const Options& opt) {
  tscalc::TimeScale T = tscalc::elaborate(tscalc::parse_scale(opt.scale_text));
  double t = T.snap(opt.at);
  tscalc::PointClass cls = T.classify(t);
  std::optional<tscalc::Interval> value;
  if (!opt.fn_text.empty()) {
    tscalc::IntervalFn f = tscalc::elaborate(tscalc::parse_fn(opt.fn_text));
    value = f.eval(t);
  }
  using tscalc::format_double;
  if (opt.json) {
    std::string out = "{\"t\":" + format_double(t);
    out += ",\"sigma\":" + format_double(T.sigma(t));
    out += ",\"rho\":" + format_double(T.rho(t));
    out += ",\"mu\":" + format_double(T.mu(t));
    out += ",\"eta\":" + format_double(T.eta(t));
    out += std::string(",\"right\":\"") + side_name(cls.right) + "\"";
    out += std::string(",\"left\":\"") + side_name(cls.left) + "\"";
    if (value) {
      out += ",\"value\":{\"lo\":" + format_double(value->lo) +
             ",\"hi\":" + format_double(value->hi) + "}";
    }
    out += "}";
    std::cout << out << "\n";
  } else {
    std::cout << "t: " << format_double(t) << "\n";
    std::cout << "sigma: " << format_double(T.sigma(t)) << "\n";
    std::cout << "rho: " << format_double(T.rho(t)) << "\n";
    std::cout << "mu: " << format_double(T.mu(t)) << "\n";
    std::cout << "eta: " << format_double(T.eta(t)) << "\n";
    std::cout << "right: " << side_name(cls.right) << "\n";
    std::cout << "left: " << side_name(cls.left) << "\n";
    if (value) std::cout << "value: " << tscalc::format_interval(*value) << "\n";
  }
  return 0;
}

int run_integrate(const Options& opt) {
  tscalc::TimeScale T = tscalc::elaborate(tscalc::parse_scale(opt.scale_text));
  tscalc::IntervalFn f = tscalc::elaborate(tscalc::parse_fn(opt.fn_text));
  tscalc::IntegralResult r = opt.kind == "ir"
                                 ? tscalc::ir_integral(f, T, opt.from, opt.to, opt.tol)
                                 : tscalc::id_integral(f, T, opt.from, opt.to, opt.tol);
  if (opt.json) {
    std::cout << tscalc::to_json(r) << "\n";
  } else {
    std::cout << tscalc::describe(r) << "\n";
  }
  return 0;
}

[[noreturn]] void missing_flag(const std::string& flag, const std::string& name) {
  throw tscalc::ParseError(flag + " is required for check --name " + name, 1, 1, flag);
}

int run_check(const Options& opt) {
  tscalc::TimeScale T = tscalc::elaborate(tscalc::parse_scale(opt.scale_text));
  const std::string& name = opt.name;
  if (opt.f_text.empty()) missing_flag("--f", name);
  if (opt.h_text.empty()) missing_flag("--h", name);
  tscalc::IntervalFn f = tscalc::elaborate(tscalc::parse_fn(opt.f_text));
  tscalc::RealExpr h = tscalc::parse_expr(opt.h_text);
  std::optional<double> q;
  if (opt.q_set) q = opt.q;

  tscalc::InequalityReport report = [&]() -> tscalc::InequalityReport {
    if (name == "jensen" || name == "jensen-concave" || name == "jensen-affine") {
      if (opt.g_text.empty()) missing_flag("--g", name);
      tscalc::RealExpr g = tscalc::parse_expr(opt.g_text);
      tscalc::JensenVariant variant = name == "jensen-concave" ? tscalc::JensenVariant::Concave
                                      : name == "jensen-affine" ? tscalc::JensenVariant::Affine
                                                                : tscalc::JensenVariant::Convex;
      return tscalc::jensen(f, g, h, T, opt.from, opt.to, opt.tol, variant, true, opt.grid);
    }
    if (opt.g_text.empty()) missing_flag("--g", name);
    tscalc::IntervalFn g = tscalc::elaborate(tscalc::parse_fn(opt.g_text));
    if (name == "holder") return tscalc::holder(f, g, h, opt.p, q, T, opt.from, opt.to, opt.tol);
    if (name == "holder-negative") {
      return tscalc::holder_negative(f, g, h, opt.p, q, T, opt.from, opt.to, opt.tol);
    }
    if (name == "cauchy-schwarz") {
      return tscalc::cauchy_schwarz(f, g, h, T, opt.from, opt.to, opt.tol);
    }
    if (name == "minkowski") {
      return tscalc::minkowski(f, g, h, opt.p, T, opt.from, opt.to, opt.tol);
    }
    if (name == "minkowski-negative") {
      return tscalc::minkowski_negative(f, g, h, opt.p, T, opt.from, opt.to, opt.tol);
    }
    throw tscalc::ParseError("unknown inequality name", 1, 1, name);
  }();
  if (opt.json) {
    std::cout << tscalc::to_json(report) << "\n";
  } else {
    std::cout << tscalc::describe(report) << "\n";
  }
  return report.holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  opt.tol = default_tolerance();

  CLI::App app{"interval-valued delta integrals and inequality certification on time scales"};
  app.require_subcommand(1);

  CLI::App* point = app.add_subcommand("point", "jump operators and classification at a point");
  point->add_option("--scale", opt.scale_text, "time-scale description")->required();
  point->add_option("--at", opt.at, "the point to inspect")->required();
  point->add_option("--fn", opt.fn_text, "function to evaluate at the point");
  point->add_flag("--json", opt.json, "machine-readable output");

  CLI::App* integrate = app.add_subcommand("integrate", "delta integral over [from, to)");
  integrate->add_option("--scale", opt.scale_text, "time-scale description")->required();
  integrate->add_option("--fn", opt.fn_text, "interval-valued integrand")->required();
  integrate->add_option("--from", opt.from, "lower limit (a scale member)")->required();
  integrate->add_option("--to", opt.to, "upper limit (a scale member)")->required();
  integrate->add_option("--kind", opt.kind, "integral kind (default id)")
      ->check(CLI::IsMember({"id", "ir"}));
  integrate->add_option("--tol", opt.tol, "endpoint tolerance");
  integrate->add_flag("--json", opt.json, "machine-readable output");

  CLI::App* check = app.add_subcommand("check", "certify an inequality numerically");
  check->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
  check->add_option("--name", opt.name, "inequality to check")
      ->required()
      ->check(CLI::IsMember({"jensen", "jensen-concave", "jensen-affine", "holder",
                             "cauchy-schwarz", "minkowski", "holder-negative",
                             "minkowski-negative"}));
  check->add_option("--scale", opt.scale_text, "time-scale description")->required();
  check->add_option("--from", opt.from, "lower limit (a scale member)")->required();
  check->add_option("--to", opt.to, "upper limit (a scale member)")->required();
  check->add_option("--f", opt.f_text, "first interval-valued function");
  check->add_option("--g", opt.g_text, "second function (scalar for jensen)");
  check->add_option("--h", opt.h_text, "scalar weight expression");
  check->add_option("--p", opt.p, "exponent p (default 2)");
  CLI::Option* q_opt = check->add_option("--q", opt.q, "conjugate exponent (default p/(p-1))");
  check->add_option("--grid", opt.grid, "convexity sampling grid (default 17)");
  check->add_option("--tol", opt.tol, "margin tolerance");
  check->add_flag("--json", opt.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  opt.q_set = q_opt->count() > 0;

  try {
    if (point->parsed()) return run_point(opt);
    if (integrate->parsed()) return run_integrate(opt);
    return run_check(opt);
  } catch (const tscalc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tscalc::DomainCoverageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tscalc::NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const tscalc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
