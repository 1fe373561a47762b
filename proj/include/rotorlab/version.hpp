#pragma once

namespace rotorlab {

inline constexpr const char* kEngineName = "rotorlab";
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace rotorlab
