#pragma once

#include <string>

#include "tscalc/inequalities.hpp"
#include "tscalc/integration.hpp"
#include "tscalc/interval.hpp"

namespace tscalc {

// Shortest round-trippable decimal; negative zero prints as "0" so equal
// values always serialize identically.
std::string format_double(double v);

std::string format_interval(const Interval& v);

// Stable single-line JSON with a fixed key order, suitable for byte-wise
// comparison between runs.
std::string to_json(const IntegralResult& r);
std::string to_json(const InequalityReport& r);

std::string describe(const IntegralResult& r);
std::string describe(const InequalityReport& r);

}  // namespace tscalc
