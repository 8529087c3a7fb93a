#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace frameforge {

/// Shortest decimal representation that round-trips to the same double.
/// Locale-independent, '.' decimal separator, ASCII only.
std::string format_double(double value);

std::optional<double> parse_double(std::string_view text);
std::optional<int> parse_int(std::string_view text);

/// |a - b| <= rel_tol * max(|a|, |b|), with an absolute floor for zeros.
bool nearly_equal(double a, double b, double rel_tol, double abs_floor = 0.0);

/// FNV-1a 64-bit content hash, hex encoded. Provenance stamping only.
std::string content_digest(std::string_view text);

} // namespace frameforge
