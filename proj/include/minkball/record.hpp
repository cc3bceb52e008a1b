#pragma once

#include <string>
#include <string_view>

#include "minkball/critical.hpp"

namespace minkball {

/// Shortest %.17g rendering; round-trips binary doubles exactly.
std::string format_double(double v);

/// JSON string escaping (quotes, backslashes, control characters); other
/// bytes pass through as UTF-8.
std::string json_escape(std::string_view s);

// Fixed output schema for one exponent. Keys and CSV columns, in order:
// p, sigma, tau, delta0, delta1, branch, delta, volume, density, class.

std::string to_json(const CriticalData& d);
std::string csv_header();
std::string to_csv_row(const CriticalData& d);

}  // namespace minkball
