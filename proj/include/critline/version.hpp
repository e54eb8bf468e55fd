#pragma once

namespace critline {

inline constexpr const char* kVersion = "0.1.0";

}
