#pragma once

namespace sturmkit {

inline constexpr const char* kToolName = "sturmkit";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace sturmkit
