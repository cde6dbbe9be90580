#pragma once

namespace entdetect {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace entdetect
