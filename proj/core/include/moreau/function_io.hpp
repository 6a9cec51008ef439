#pragma once

#include <iosfwd>
#include <string>

#include "moreau/piecewise_cubic.hpp"

namespace moreau {

/// Parses the JSON function-spec format:
///   { "pieces": [{"a":0,"b":0,"c":-5,"d":-2}, ...],
///     "breakpoints": [-1, 0], "bounds": [null, null] }
/// "bounds" is optional; null means unbounded. Throws ParseError on malformed
/// input and ValidationError if the function is not convex piecewise cubic.
PiecewiseCubic parse_function_spec(const std::string& json_text);
PiecewiseCubic load_function_spec(const std::string& path);

/// Shortest round-trip decimal rendering of a double (17 significant digits).
std::string format_roundtrip(double v);
/// 12-significant-digit rendering used in human-facing CLI output.
std::string format_short(double v);

}  // namespace moreau
