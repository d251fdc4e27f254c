#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace collabind::text {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
std::vector<std::string> split(std::string_view s, char delim);

// Splits on `delim` only outside square brackets.
std::vector<std::string> split_outside_brackets(std::string_view s, char delim);

// Display rounding: half away from zero at `digits` decimals.
double round_half_up(double value, int digits);

// Rounded fixed-point rendering, e.g. format_fixed(44.827, 2) == "44.83".
std::string format_fixed(double value, int digits);

}  // namespace collabind::text
