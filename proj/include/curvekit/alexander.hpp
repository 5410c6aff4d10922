#pragma once

#include <array>
#include <deque>
#include <vector>

#include "curvekit/curve_map.hpp"

namespace curvekit {

// Exact half-integer, stored as twice its value.
struct HalfInt {
    int num2 = 0;
    friend bool operator==(const HalfInt&, const HalfInt&) = default;
    double value() const { return num2 / 2.0; }
};

// Winding numbers of the curve: integer per face (0 on the outer face,
// +1 to the left of the traversal), integer per vertex (corner average),
// half-integer per edge (average of the flanking faces).
struct AlexanderNumbering {
    std::vector<int> face_values;      // by face id
    std::vector<int> vertex_values;    // by vertex id
    std::vector<int> edge_value_num2;  // by dart, equal on both darts of an edge
};

namespace detail {

// Propagate a face labeling from the outer face.  weight[d] applies to
// the forward dart d of each edge: label(left of d) - label(right of d)
// = weight, where right = face_of(d) and left = face_of(alpha(d)).
inline std::vector<int> propagate_face_labels(const CurveMap& m, const std::vector<char>& fwd,
                                              const std::vector<int>& weight) {
    int fc = m.face_count();
    std::vector<int> value(fc, 0);
    std::vector<char> known(fc, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(fc);  // (face, delta seen from here)
    for (Dart d = 0; d < m.dart_count(); ++d) {
        if (!fwd[d]) continue;
        int right = m.face_of(d);
        int left = m.face_of(m.alpha(d));
        adj[right].push_back({left, weight[d]});
        adj[left].push_back({right, -weight[d]});
    }
    std::deque<int> queue{m.outer_face()};
    known[m.outer_face()] = 1;
    value[m.outer_face()] = 0;
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (auto [g, delta] : adj[f]) {
            int v = value[f] + delta;
            if (!known[g]) {
                known[g] = 1;
                value[g] = v;
                queue.push_back(g);
            } else if (value[g] != v) {
                throw ValidationError("inconsistent face labeling");
            }
        }
    }
    return value;
}

}  // namespace detail

inline AlexanderNumbering alexander_numbering(const CurveMap& m) {
    AlexanderNumbering out;
    if (m.is_circle()) {
        out.face_values = {0, 1};  // outer, then the disk to the left
        return out;
    }
    std::vector<char> fwd = m.forward_darts();
    std::vector<int> weight(m.dart_count(), 1);
    out.face_values = detail::propagate_face_labels(m, fwd, weight);
    out.vertex_values.assign(m.vertex_count(), 0);
    for (std::uint32_t v = 0; v < m.vertex_count(); ++v) {
        int sum = 0;
        for (int s = 0; s < 4; ++s) sum += out.face_values[m.face_of(make_dart(v, s))];
        if (sum % 4 != 0) throw ValidationError("vertex winding not an integer");
        out.vertex_values[v] = sum / 4;
    }
    out.edge_value_num2.assign(m.dart_count(), 0);
    for (Dart d = 0; d < m.dart_count(); ++d)
        out.edge_value_num2[d] = out.face_values[m.face_of(d)] + out.face_values[m.face_of(m.alpha(d))];
    return out;
}

// Twice the winding number of the closed sub-walk between the two
// passages of x around the point x itself.  The basepoint edge must
// border the outer face so wind(gamma_x, basepoint) = 0.
inline int subloop_winding_num2(const CurveMap& m, int x) {
    if (m.is_circle()) throw ValidationError("circle has no crossings");
    std::vector<Dart> t = m.traversal();
    if (t.size() != 2 * m.vertex_count()) throw ValidationError("not unicursal");
    int outer = m.outer_face();
    if (m.face_of(m.basepoint()) != outer && m.face_of(m.alpha(m.basepoint())) != outer)
        throw ValidationError("basepoint not on outer face");

    int i = -1, j = -1;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (static_cast<int>(dart_vertex(m.alpha(t[k]))) == x) {
            if (i < 0) i = static_cast<int>(k);
            else j = static_cast<int>(k);
        }
    }
    if (j < 0) throw ValidationError("crossing out of range");

    // label faces of the full curve; only edges of gamma_x carry weight
    std::vector<char> fwd(m.dart_count(), 0);
    for (Dart d : t) fwd[d] = 1;
    std::vector<int> weight(m.dart_count(), 0);
    for (int k = i + 1; k <= j; ++k) weight[t[k]] = 1;
    std::vector<int> label = detail::propagate_face_labels(m, fwd, weight);

    // the two rays of gamma_x at x bound two sectors
    Dart ray_out = t[i + 1];          // gamma_x leaves x here
    Dart ray_in = m.alpha(t[j]);      // and returns here
    Dart lone, rest0;
    if (rotate(ray_out) == ray_in) {
        lone = ray_out;   // single corner between ray_out and ray_in
        rest0 = ray_in;
    } else if (rotate(ray_in) == ray_out) {
        lone = ray_in;
        rest0 = ray_out;
    } else {
        throw ValidationError("subloop rays not adjacent");
    }
    auto corner = [&](Dart d) { return label[m.face_of(rotate(d))]; };  // corner ccw of d
    int small_sector = corner(lone);
    int big_sector = corner(rest0);
    if (corner(rotate(rest0)) != big_sector || corner(rotate(rotate(rest0))) != big_sector)
        throw ValidationError("subloop sector labels disagree");
    return small_sector + big_sector;
}

inline HalfInt subloop_winding(const CurveMap& m, int x) {
    return HalfInt{subloop_winding_num2(m, x)};
}

// Eccentricity diameter of the face-adjacency graph.
inline int dual_diameter(const CurveMap& m) {
    if (m.is_circle()) return 1;
    int fc = m.face_count();
    std::vector<std::vector<int>> adj(fc);
    for (Dart d = 0; d < m.dart_count(); ++d) {
        if (d < m.alpha(d)) {
            int a = m.face_of(d), b = m.face_of(m.alpha(d));
            if (a != b) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        }
    }
    int diam = 0;
    for (int s = 0; s < fc; ++s) {
        std::vector<int> dist(fc, -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop_front();
            for (int g : adj[f])
                if (dist[g] < 0) {
                    dist[g] = dist[f] + 1;
                    queue.push_back(g);
                }
        }
        for (int f = 0; f < fc; ++f) diam = std::max(diam, dist[f]);
    }
    return diam;
}

}  // namespace curvekit
