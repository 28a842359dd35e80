#pragma once

namespace radial {

inline constexpr const char* kToolName = "radial";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kOutputSchemaVersion = 1;

}  // namespace radial
