#pragma once

#include <string_view>

// Contents of data/ compiled into the library (generated at configure time).
namespace koscope::builtin {

std::string_view tagset();
std::string_view rules();
std::string_view context_rules_el();

}  // namespace koscope::builtin
