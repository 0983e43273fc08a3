#pragma once

namespace sgkink {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kToolName = "sgkink";

}  // namespace sgkink
