#pragma once

namespace stratcx {

inline constexpr const char* kToolName = "stratcx";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace stratcx
