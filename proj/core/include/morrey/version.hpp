#pragma once

namespace morrey {

inline constexpr const char* version = "0.1.0";

}  // namespace morrey
