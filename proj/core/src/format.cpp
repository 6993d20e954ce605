#include "hyptube/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace hyptube {

std::string format_number(double x) {
  x += 0.0;  // no "-0"
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general,
                           kReportDigits);
  std::string s(buf.data(), res.ptr);

  // to_chars drops trailing zeros; put them back so every value shows the
  // same number of significant digits.
  const auto exp_pos = s.find('e');
  std::string mantissa = s.substr(0, exp_pos);
  const std::string exponent = exp_pos == std::string::npos ? "" : s.substr(exp_pos);
  int digits = 0;
  bool leading = true;
  for (char c : mantissa) {
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++digits;
  }
  if (x == 0.0) digits = 1;
  if (digits < kReportDigits) {
    if (mantissa.find('.') == std::string::npos) mantissa.push_back('.');
    mantissa.append(static_cast<std::size_t>(kReportDigits - digits), '0');
  }
  return mantissa + exponent;
}

double round_significant(double x) {
  if (!std::isfinite(x)) return x;
  x += 0.0;
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general,
                           kReportDigits);
  double out = 0.0;
  std::from_chars(buf.data(), res.ptr, out);
  return out;
}

std::string format_exact(double x) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

}  // namespace hyptube
