#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "curvekit/dart.hpp"
#include "curvekit/errors.hpp"

namespace curvekit {

using GDart = std::uint32_t;

inline constexpr GDart kNoGDart = 0xffffffffu;

// A connected plane graph of arbitrary degrees as a rotation system.
// Darts are numbered contiguously per vertex in counterclockwise order.
// Edges carry stable labels so faces can be tracked across rewrites; the
// single-vertex edgeless graph is the `trivial` terminal of reductions.
class PlaneGraph {
  public:
    struct Raw {
        std::vector<std::vector<GDart>> rot;  // ccw dart list per vertex
        std::vector<GDart> alpha;
        std::vector<int> edge_of;             // per dart
        std::vector<long long> edge_labels;   // per edge index
        long long next_label = 0;
        GDart outer = kNoGDart;
    };

    explicit PlaneGraph(Raw raw)
        : alpha_(std::move(raw.alpha)),
          edge_of_(std::move(raw.edge_of)),
          edge_labels_(std::move(raw.edge_labels)),
          next_label_(raw.next_label),
          outer_(raw.outer) {
        vertex_of_.assign(alpha_.size(), 0);
        pos_of_.assign(alpha_.size(), 0);
        rot_ = std::move(raw.rot);
        for (std::uint32_t v = 0; v < rot_.size(); ++v)
            for (std::uint32_t k = 0; k < rot_[v].size(); ++k) {
                vertex_of_[rot_[v][k]] = v;
                pos_of_[rot_[v][k]] = k;
            }
        validate();
        build_faces();
    }

    static PlaneGraph trivial() {
        Raw raw;
        raw.rot.push_back({});
        return PlaneGraph(std::move(raw));
    }

    std::size_t vertex_count() const { return rot_.size(); }
    std::size_t edge_count() const { return edge_labels_.size(); }
    std::size_t dart_count() const { return alpha_.size(); }
    bool is_trivial() const { return dart_count() == 0; }

    int degree(std::uint32_t v) const { return static_cast<int>(rot_[v].size()); }
    GDart dart_at(std::uint32_t v, std::uint32_t pos) const { return rot_[v][pos]; }
    std::uint32_t vertex_of(GDart d) const { return vertex_of_[d]; }
    std::uint32_t pos_of(GDart d) const { return pos_of_[d]; }
    GDart alpha(GDart d) const { return alpha_[d]; }
    GDart rotate(GDart d) const {
        const auto& r = rot_[vertex_of_[d]];
        return r[(pos_of_[d] + 1) % r.size()];
    }
    GDart rotate_back(GDart d) const {
        const auto& r = rot_[vertex_of_[d]];
        return r[(pos_of_[d] + r.size() - 1) % r.size()];
    }
    GDart face_next(GDart d) const { return rotate(alpha_[d]); }
    int edge_of(GDart d) const { return edge_of_[d]; }
    long long edge_label(int e) const { return edge_labels_[e]; }
    long long next_label() const { return next_label_; }
    const std::vector<GDart>& rotation(std::uint32_t v) const { return rot_[v]; }

    GDart outer_rep() const { return outer_; }
    int outer_face() const { return is_trivial() ? 0 : face_id_[outer_]; }
    int face_count() const { return is_trivial() ? 1 : static_cast<int>(face_reps_.size()); }
    int face_of(GDart d) const { return face_id_[d]; }
    GDart face_rep(int f) const { return face_reps_[f]; }
    int face_degree(int f) const { return static_cast<int>(face_darts_[f].size()); }
    const std::vector<GDart>& face_darts(int f) const { return face_darts_[f]; }

    // dart ids of the two ends of an edge, smaller first
    std::pair<GDart, GDart> edge_darts(int e) const {
        GDart d = kNoGDart;
        for (GDart k = 0; k < alpha_.size(); ++k)
            if (edge_of_[k] == e) {
                d = k;
                break;
            }
        return {d, alpha_[d]};
    }

    PlaneGraph with_outer(GDart d) const {
        Raw raw = to_raw();
        raw.outer = d;
        return PlaneGraph(std::move(raw));
    }

    PlaneGraph mirrored() const {
        Raw raw = to_raw();
        for (auto& r : raw.rot) std::reverse(r.begin(), r.end());
        return PlaneGraph(std::move(raw));
    }

    Raw to_raw() const {
        Raw raw;
        raw.rot = rot_;
        raw.alpha = alpha_;
        raw.edge_of = edge_of_;
        raw.edge_labels = edge_labels_;
        raw.next_label = next_label_;
        raw.outer = outer_;
        return raw;
    }

  private:
    void validate() const {
        if (rot_.empty()) throw ValidationError("graph has no vertices");
        if (alpha_.empty()) {
            if (rot_.size() != 1) throw ValidationError("not connected");
            return;
        }
        std::size_t nd = alpha_.size();
        if (nd % 2) throw ValidationError("odd dart count");
        if (edge_of_.size() != nd) throw ValidationError("edge table has wrong size");
        for (GDart d = 0; d < nd; ++d) {
            if (alpha_[d] >= nd) throw ValidationError("alpha image out of range");
            if (alpha_[d] == d) throw ValidationError("alpha not fixed-point-free");
            if (alpha_[alpha_[d]] != d) throw ValidationError("alpha not an involution");
            if (edge_of_[d] != edge_of_[alpha_[d]]) throw ValidationError("edge table inconsistent");
        }
        for (const auto& r : rot_)
            if (r.empty()) throw ValidationError("degree-0 vertex in a nontrivial graph");
        if (outer_ >= nd) throw ValidationError("outer dart out of range");
        std::vector<char> seen(rot_.size(), 0);
        std::vector<std::uint32_t> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            for (GDart d : rot_[v]) {
                std::uint32_t w = vertex_of_[alpha_[d]];
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != rot_.size()) throw ValidationError("not connected");
    }

    void build_faces() {
        if (is_trivial()) return;
        std::size_t nd = alpha_.size();
        face_id_.assign(nd, -1);
        for (GDart d = 0; d < nd; ++d) {
            if (face_id_[d] >= 0) continue;
            int f = static_cast<int>(face_reps_.size());
            face_reps_.push_back(d);
            face_darts_.emplace_back();
            GDart e = d;
            do {
                face_id_[e] = f;
                face_darts_[f].push_back(e);
                e = face_next(e);
            } while (e != d);
        }
        long long euler = static_cast<long long>(vertex_count()) -
                          static_cast<long long>(edge_count()) +
                          static_cast<long long>(face_reps_.size());
        if (euler != 2) throw ValidationError("wrong face count (rotation system is not planar)");
    }

    std::vector<std::vector<GDart>> rot_;
    std::vector<GDart> alpha_;
    std::vector<int> edge_of_;
    std::vector<long long> edge_labels_;
    long long next_label_ = 0;
    GDart outer_ = kNoGDart;
    std::vector<std::uint32_t> vertex_of_, pos_of_;
    std::vector<int> face_id_;
    std::vector<GDart> face_reps_;
    std::vector<std::vector<GDart>> face_darts_;
};

// Assemble a plane graph from edges plus an explicit counterclockwise
// (edge, end) rotation at every vertex.
class PlaneGraphBuilder {
  public:
    std::uint32_t add_vertex() {
        rotations_.emplace_back();
        return static_cast<std::uint32_t>(rotations_.size() - 1);
    }

    int add_edge(std::uint32_t u, std::uint32_t w) {
        edges_.push_back({u, w});
        return static_cast<int>(edges_.size() - 1);
    }

    void set_rotation(std::uint32_t v, std::vector<std::pair<int, int>> ends) {
        rotations_[v] = std::move(ends);
    }

    PlaneGraph build(int outer_edge = -1, int outer_end = 0) const {
        PlaneGraph::Raw raw;
        std::size_t nd = 2 * edges_.size();
        raw.alpha.assign(nd, kNoGDart);
        raw.edge_of.assign(nd, -1);
        raw.rot.resize(rotations_.size());
        std::vector<std::array<GDart, 2>> end_dart(edges_.size(), {kNoGDart, kNoGDart});
        GDart next = 0;
        for (std::uint32_t v = 0; v < rotations_.size(); ++v) {
            for (auto [e, end] : rotations_[v]) {
                if (e < 0 || e >= static_cast<int>(edges_.size()))
                    throw ValidationError("rotation references unknown edge");
                if (end_dart[e][end] != kNoGDart) throw ValidationError("edge end used twice");
                GDart d = next++;
                end_dart[e][end] = d;
                raw.rot[v].push_back(d);
                raw.edge_of[d] = e;
            }
        }
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (end_dart[e][0] == kNoGDart || end_dart[e][1] == kNoGDart)
                throw ValidationError("edge end missing from rotations");
            raw.alpha[end_dart[e][0]] = end_dart[e][1];
            raw.alpha[end_dart[e][1]] = end_dart[e][0];
        }
        raw.edge_labels.resize(edges_.size());
        for (std::size_t e = 0; e < edges_.size(); ++e) raw.edge_labels[e] = static_cast<long long>(e);
        raw.next_label = static_cast<long long>(edges_.size());
        if (!edges_.empty()) {
            raw.outer = outer_edge < 0 ? 0 : end_dart[outer_edge][outer_end];
        }
        return PlaneGraph(std::move(raw));
    }

  private:
    std::vector<std::vector<std::pair<int, int>>> rotations_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

// Geometric dual: faces become vertices with the face orbit reversed
// (the clockwise boundary walk turns counterclockwise around the dual
// vertex).  Dart ids and edge labels carry over.
inline PlaneGraph dual(const PlaneGraph& g) {
    if (g.is_trivial()) return PlaneGraph::trivial();
    PlaneGraph::Raw raw;
    raw.alpha.assign(g.dart_count(), kNoGDart);
    raw.edge_of.assign(g.dart_count(), -1);
    for (GDart d = 0; d < g.dart_count(); ++d) {
        raw.alpha[d] = g.alpha(d);
        raw.edge_of[d] = g.edge_of(d);
    }
    raw.rot.resize(g.face_count());
    for (int f = 0; f < g.face_count(); ++f) {
        raw.rot[f] = g.face_darts(f);
        std::reverse(raw.rot[f].begin(), raw.rot[f].end());
    }
    raw.edge_labels.resize(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) raw.edge_labels[e] = g.edge_label(static_cast<int>(e));
    raw.next_label = g.next_label();
    raw.outer = g.outer_rep();  // its dual face corresponds to a vertex on the outer boundary
    return PlaneGraph(std::move(raw));
}

// Canonical key for plane graphs (degree sequence in discovery order
// plus relabeled alpha), minimized over starting darts and, optionally,
// reflection.
inline std::string canonical_form(const PlaneGraph& g, bool include_mirror) {
    if (g.is_trivial()) return "V";
    std::size_t nd = g.dart_count();
    std::vector<std::uint32_t> best, cur;
    std::vector<std::int32_t> vlabel(g.vertex_count());
    std::vector<GDart> vanchor(g.vertex_count());
    std::vector<GDart> old_of_new(nd);
    std::vector<std::uint32_t> offset_of_label(g.vertex_count() + 1);
    bool have = false;
    for (int chi : include_mirror ? std::vector<int>{1, -1} : std::vector<int>{1}) {
        for (GDart start = 0; start < nd; ++start) {
            std::fill(vlabel.begin(), vlabel.end(), -1);
            cur.clear();
            int next_vertex = 0;
            std::uint32_t next_dart = 0;
            auto label_vertex = [&](GDart anchor) {
                std::uint32_t v = g.vertex_of(anchor);
                vlabel[v] = next_vertex;
                vanchor[v] = anchor;
                offset_of_label[next_vertex] = next_dart;
                cur.push_back(0x80000000u | static_cast<std::uint32_t>(g.degree(v)));
                GDart d = anchor;
                for (int k = 0; k < g.degree(v); ++k) {
                    old_of_new[next_dart++] = d;
                    d = chi > 0 ? g.rotate(d) : g.rotate_back(d);
                }
                ++next_vertex;
            };
            auto new_id = [&](GDart d) {
                std::uint32_t v = g.vertex_of(d);
                int deg = g.degree(v);
                int k = (static_cast<int>(g.pos_of(d)) - static_cast<int>(g.pos_of(vanchor[v]))) *
                        chi;
                k = ((k % deg) + deg) % deg;
                return offset_of_label[vlabel[v]] + static_cast<std::uint32_t>(k);
            };
            label_vertex(start);
            for (std::uint32_t i = 0; i < nd; ++i) {
                GDart e = g.alpha(old_of_new[i]);
                if (vlabel[g.vertex_of(e)] < 0) label_vertex(e);
                cur.push_back(new_id(e));
            }
            if (!have || cur < best) {
                best = cur;
                have = true;
            }
        }
    }
    std::string s;
    s.reserve(best.size() * 4);
    for (std::uint32_t x : best) {
        s.push_back(static_cast<char>((x >> 24) & 0xff));
        s.push_back(static_cast<char>((x >> 16) & 0xff));
        s.push_back(static_cast<char>((x >> 8) & 0xff));
        s.push_back(static_cast<char>(x & 0xff));
    }
    return s;
}

}  // namespace curvekit
