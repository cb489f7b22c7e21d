#pragma once

namespace ogc {

inline constexpr const char* kEngineVersion = "1.0.0";

} // namespace ogc
