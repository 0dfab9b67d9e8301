#pragma once

namespace sbmds {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sbmds
