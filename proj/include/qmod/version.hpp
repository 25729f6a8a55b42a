#pragma once

namespace qmod {

inline constexpr const char* kVersion = "0.1.0";

} // namespace qmod
