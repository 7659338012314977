#pragma once

namespace sicq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sicq
