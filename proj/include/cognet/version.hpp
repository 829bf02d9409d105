#pragma once

namespace cognet {

inline constexpr const char* kToolName = "cognet";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace cognet
