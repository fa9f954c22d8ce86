#pragma once

namespace smeared {

inline constexpr const char* kEngineVersion = "smeared 0.1.0";

}  // namespace smeared
