#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wsn {

/// 17 significant digits; parses back to the identical double.
std::string format_real(double value);

std::optional<double> parse_real(std::string_view text);
std::optional<unsigned long long> parse_unsigned(std::string_view text);

std::string_view trim(std::string_view text);
std::vector<std::string_view> split(std::string_view text, char sep);

}  // namespace wsn
