#pragma once

namespace lt {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lt
