#pragma once

namespace gupatom {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace gupatom
