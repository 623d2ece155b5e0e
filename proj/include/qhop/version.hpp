#pragma once

namespace qhop {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qhop
