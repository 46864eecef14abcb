#pragma once

namespace assprime {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "assprime-report/1";

} // namespace assprime
