#pragma once

namespace wellspring {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wellspring
