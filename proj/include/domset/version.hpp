#pragma once

namespace domset {

inline constexpr const char* kToolName = "domset";
inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kResultSchemaVersion = 1;

}  // namespace domset
