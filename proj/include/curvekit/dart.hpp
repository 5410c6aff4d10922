#pragma once

#include <cstdint>
#include <string>

namespace curvekit {

// A dart is one of the four edge-ends at a crossing, encoded as
// 4*vertex + slot.  Slots run counterclockwise around the crossing, so
// slot arithmetic is the whole rotation system.
using Dart = std::uint32_t;

inline constexpr Dart kNoDart = 0xffffffffu;

inline constexpr Dart make_dart(std::uint32_t vertex, std::uint32_t slot) {
    return 4 * vertex + (slot & 3u);
}
inline constexpr std::uint32_t dart_vertex(Dart d) { return d >> 2; }
inline constexpr std::uint32_t dart_slot(Dart d) { return d & 3u; }

// counterclockwise successor at the same vertex
inline constexpr Dart rotate(Dart d) { return (d & ~3u) | ((d + 1) & 3u); }
inline constexpr Dart rotate_back(Dart d) { return (d & ~3u) | ((d + 3) & 3u); }
// the dart straight across the vertex
inline constexpr Dart opposite(Dart d) { return d ^ 2u; }

inline std::string format_dart(Dart d) {
    return std::to_string(dart_vertex(d)) + "." + std::to_string(dart_slot(d));
}

}  // namespace curvekit
