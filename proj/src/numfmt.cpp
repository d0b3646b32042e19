#include "koscope/numfmt.hpp"

#include <algorithm>

#include "u128.hpp"

namespace koscope {

namespace {

// round(num / den * 100) half up; num may already carry a factor of 100
u128 hundredths(u128 num, u128 den) { return (num * 200u + den) / (2u * den); }

std::string fixed2(u128 h) {
  const auto frac = static_cast<unsigned>(h % 100u);
  u128 whole = h / 100u;
  std::string digits;
  do {
    digits += static_cast<char>('0' + static_cast<unsigned>(whole % 10u));
    whole /= 10u;
  } while (whole != 0);
  std::reverse(digits.begin(), digits.end());
  digits += '.';
  digits += static_cast<char>('0' + frac / 10);
  digits += static_cast<char>('0' + frac % 10);
  return digits;
}

}  // namespace

std::int64_t hundredths_half_up(std::uint64_t num, std::uint64_t den) {
  return static_cast<std::int64_t>(hundredths(num, den));
}

std::string ratio2(std::uint64_t num, std::uint64_t den) { return fixed2(hundredths(num, den)); }

std::string percent2(std::uint64_t num, std::uint64_t den) {
  return fixed2(hundredths(static_cast<u128>(num) * 100u, den));
}

double percent(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return 0.0;
  return 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace koscope
