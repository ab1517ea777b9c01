#pragma once

namespace acsee {

inline constexpr const char* kBuildName = "acsee";
inline constexpr const char* kBuildVersion = "1.0.0";

}  // namespace acsee
