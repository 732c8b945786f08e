#pragma once

namespace strata {

inline constexpr const char* kToolName = "braid-strata";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace strata
