#pragma once

namespace lmax {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lmax
