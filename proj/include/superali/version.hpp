#pragma once

namespace superali {

inline constexpr const char* version = "1.0.0";

} // namespace superali
