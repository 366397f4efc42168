#pragma once

namespace ng {

inline constexpr const char* kVersion = "namegame 0.1.0";

}
