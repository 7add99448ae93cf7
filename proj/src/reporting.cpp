#include "tscalc/reporting.hpp"

#include <cstdio>

namespace tscalc {

std::string format_double(double v) {
  if (v == 0.0) return "0";  // normalizes -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_interval(const Interval& v) {
  return "[" + format_double(v.lo) + ", " + format_double(v.hi) + "]";
}

namespace {

std::string json_interval(const Interval& v) {
  return "{\"lo\":" + format_double(v.lo) + ",\"hi\":" + format_double(v.hi) + "}";
}

}  // namespace

std::string to_json(const IntegralResult& r) {
  std::string out = "{\"value\":";
  out += json_interval(r.value);
  out += ",\"method\":\"";
  out += method_name(r.method);
  out += "\",\"error_estimate\":";
  out += format_double(r.error_estimate);
  out += ",\"cells\":";
  out += std::to_string(r.cells_used);
  out += "}";
  return out;
}

std::string to_json(const InequalityReport& r) {
  std::string out = "{\"name\":\"";
  out += inequality_name(r.name);
  out += "\",\"lhs\":";
  out += json_interval(r.lhs);
  out += ",\"rhs\":";
  out += json_interval(r.rhs);
  out += ",\"relation\":\"";
  out += relation_name(r.relation);
  out += "\",\"margin_lo\":";
  out += format_double(r.margin_lo);
  out += ",\"margin_hi\":";
  out += format_double(r.margin_hi);
  out += ",\"holds\":";
  out += r.holds ? "true" : "false";
  out += "}";
  return out;
}

std::string describe(const IntegralResult& r) {
  std::string out = "value: " + format_interval(r.value) + "\n";
  out += std::string("method: ") + method_name(r.method) + "\n";
  out += "error estimate: " + format_double(r.error_estimate) + "\n";
  out += "cells: " + std::to_string(r.cells_used);
  return out;
}

std::string describe(const InequalityReport& r) {
  std::string out = std::string(inequality_name(r.name)) + ": ";
  out += r.holds ? "holds" : "VIOLATED";
  out += std::string(" (relation ") + relation_name(r.relation) + ")\n";
  out += "lhs: " + format_interval(r.lhs) + "\n";
  out += "rhs: " + format_interval(r.rhs) + "\n";
  out += "margin_lo: " + format_double(r.margin_lo) + "\n";
  out += "margin_hi: " + format_double(r.margin_hi);
  return out;
}

}  // namespace tscalc
