#pragma once

namespace latword {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace latword
