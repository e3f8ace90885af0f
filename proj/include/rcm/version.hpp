#pragma once

namespace rcm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rcm
