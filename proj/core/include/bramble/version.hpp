#pragma once

namespace bramble {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace bramble
