#pragma once

namespace fermipair {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fermipair
