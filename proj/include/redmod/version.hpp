#pragma once

namespace redmod {

inline constexpr const char* kToolName = "redmod";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace redmod
