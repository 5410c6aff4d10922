#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvekit/curve_map.hpp"

namespace curvekit {

namespace detail {

// Relabel darts breadth-first from `start`, walking rotations with step
// `chi` (+1, or -1 for the mirror), and encode alpha over the new ids.
// Connected 4-regular maps only.
inline void canonical_encoding(const CurveMap& m, Dart start, int chi, std::vector<std::uint32_t>& enc,
                               std::vector<std::int32_t>& vlabel, std::vector<Dart>& vanchor,
                               std::vector<Dart>& old_of_new) {
    std::size_t nd = m.dart_count();
    enc.resize(nd);
    vlabel.assign(m.vertex_count(), -1);
    vanchor.assign(m.vertex_count(), kNoDart);
    old_of_new.resize(nd);
    int next_vertex = 0;
    auto label_vertex = [&](Dart anchor) {
        std::uint32_t v = dart_vertex(anchor);
        vlabel[v] = next_vertex;
        vanchor[v] = anchor;
        Dart d = anchor;
        for (int k = 0; k < 4; ++k) {
            old_of_new[4 * next_vertex + k] = d;
            d = chi > 0 ? rotate(d) : rotate_back(d);
        }
        ++next_vertex;
    };
    auto new_id = [&](Dart d) -> std::uint32_t {
        std::uint32_t v = dart_vertex(d);
        std::uint32_t k = (4 + (dart_slot(d) - dart_slot(vanchor[v])) * chi) & 3u;
        return 4 * vlabel[v] + k;
    };
    label_vertex(start);
    for (std::size_t i = 0; i < nd; ++i) {
        Dart e = m.alpha(old_of_new[i]);
        if (vlabel[dart_vertex(e)] < 0) label_vertex(e);
        enc[i] = new_id(e);
    }
}

inline std::string pack_encoding(const std::vector<std::uint32_t>& enc) {
    std::string s;
    s.reserve(enc.size() * 3);
    for (std::uint32_t x : enc) {
        s.push_back(static_cast<char>((x >> 16) & 0xff));
        s.push_back(static_cast<char>((x >> 8) & 0xff));
        s.push_back(static_cast<char>(x & 0xff));
    }
    return s;
}

}  // namespace detail

// Key equal for two maps iff they are isomorphic rotation systems; with
// include_mirror also up to reversing all rotations.  Basepoint and
// outer face are not part of the key.
inline std::string canonical_form(const CurveMap& m, bool include_mirror) {
    if (m.is_circle()) return "O";
    std::vector<std::uint32_t> enc, best;
    std::vector<std::int32_t> vlabel;
    std::vector<Dart> vanchor, old_of_new;
    bool have = false;
    for (int chi : include_mirror ? std::vector<int>{1, -1} : std::vector<int>{1}) {
        for (Dart start = 0; start < m.dart_count(); ++start) {
            detail::canonical_encoding(m, start, chi, enc, vlabel, vanchor, old_of_new);
            if (!have || enc < best) {
                best = enc;
                have = true;
            }
        }
    }
    return detail::pack_encoding(best);
}

}  // namespace curvekit
