#pragma once

namespace ns2d {

inline constexpr const char* kVersionString = "0.1.0";

} // namespace ns2d
