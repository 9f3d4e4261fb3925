#pragma once

// Locale-independent number formatting shared by every report writer.

#include <string>
#include <string_view>

namespace mvroute {

/// `significant` significant digits, '.' separator, %g-style exponent switch.
[[nodiscard]] std::string format_sig(double value, int significant = 6);

/// Shortest text that parses back to the same double.
[[nodiscard]] std::string format_roundtrip(double value);

/// Parses a full string as a double, locale-independently. Accepts an
/// optional engineering suffix (f p n u m k M G) when `allow_suffix` is set.
/// Returns false on any trailing garbage.
[[nodiscard]] bool parse_number(std::string_view text, double& out, bool allow_suffix = false);

}  // namespace mvroute
