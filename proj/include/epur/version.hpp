#pragma once

namespace epur {
inline constexpr const char* kVersion = "0.1.0";
}
