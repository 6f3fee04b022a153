#pragma once

namespace disent {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace disent
