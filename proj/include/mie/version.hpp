#pragma once

namespace mie {

inline constexpr const char* version = "0.1.0";

}  // namespace mie
