#pragma once

namespace forge {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "flowforge";

} // namespace forge
