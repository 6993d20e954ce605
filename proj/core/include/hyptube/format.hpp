#pragma once

#include <string>

namespace hyptube {

inline constexpr int kReportDigits = 9;

/// Nine significant digits with trailing zeros kept, e.g. 0.658478948 or
/// 1.00000000e-12. The separator is '.' whatever the locale.
std::string format_number(double x);

/// x rounded to nine significant digits (what format_number prints).
double round_significant(double x);

/// Shortest decimal string that reads back to exactly x.
std::string format_exact(double x);

}  // namespace hyptube
