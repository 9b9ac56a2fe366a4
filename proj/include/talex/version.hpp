#ifndef TALEX_VERSION_HPP
#define TALEX_VERSION_HPP

namespace talex {

inline constexpr const char* kEngineName = "talex";
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace talex

#endif
