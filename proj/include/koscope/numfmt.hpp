#pragma once

#include <cstdint>
#include <string>

namespace koscope {

// Exact half-up rounding of num/den to two decimals, computed in integers so
// that values sitting on a .xx5 boundary never round the wrong way.
// Result must fit in int64 (num / den below about 9.2e16).
std::int64_t hundredths_half_up(std::uint64_t num, std::uint64_t den);

// "2.19" for 15067/6882. den must be non-zero.
std::string ratio2(std::uint64_t num, std::uint64_t den);

// "55.42" for 8443/15234 (percentage of den). den must be non-zero.
std::string percent2(std::uint64_t num, std::uint64_t den);

// Full-precision percentage, 0 when den == 0.
double percent(std::uint64_t num, std::uint64_t den);

}  // namespace koscope
