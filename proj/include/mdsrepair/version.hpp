#pragma once

namespace mdsrepair {

inline constexpr const char* kToolName = "mdsrepair";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace mdsrepair
