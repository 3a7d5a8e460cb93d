#pragma once

namespace cantor {
inline constexpr const char* kVersion = "0.1.0";
}
