#pragma once

namespace sipot {

inline constexpr const char* version = "1.0.0";

}  // namespace sipot
