#pragma once

namespace koscope {

// Wide enough for count products in exact percentage arithmetic.
__extension__ using u128 = unsigned __int128;

}  // namespace koscope
