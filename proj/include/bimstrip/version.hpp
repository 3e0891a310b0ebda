#pragma once

namespace bimstrip {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace bimstrip
