#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "curvekit/dart.hpp"
#include "curvekit/errors.hpp"

namespace curvekit {

// A generic closed curve -- or more generally any connected 4-regular
// plane map -- stored as a rotation system.  Only the edge involution
// alpha is kept; the counterclockwise rotation at each crossing is the
// slot order.  The basepoint dart fixes where and in which direction the
// traversal starts, and outer_rep names the unbounded face.  A simple
// closed curve (no crossings) is the special circle value.
//
// Derived structure:
//   succ(d)      = opposite(alpha(d))   traversal goes straight through
//   face_next(d) = rotate(alpha(d))     orbit = face on the right of d
class CurveMap {
  public:
    static CurveMap circle() { return CurveMap(); }

    CurveMap(std::size_t vertex_count, std::vector<Dart> alpha, Dart basepoint, Dart outer_rep)
        : n_(vertex_count), alpha_(std::move(alpha)), base_(basepoint), outer_(outer_rep) {
        validate();
        build_faces();
    }

    bool is_circle() const { return n_ == 0; }
    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return 2 * n_; }
    std::size_t dart_count() const { return 4 * n_; }

    Dart alpha(Dart d) const { return alpha_[d]; }
    Dart succ(Dart d) const { return opposite(alpha_[d]); }
    Dart face_next(Dart d) const { return rotate(alpha_[d]); }
    Dart basepoint() const { return base_; }
    Dart outer_rep() const { return outer_; }

    int face_count() const { return is_circle() ? 2 : static_cast<int>(face_reps_.size()); }
    int face_of(Dart d) const { return face_id_[d]; }
    int outer_face() const { return is_circle() ? 0 : face_id_[outer_]; }
    Dart face_rep(int f) const { return face_reps_[f]; }
    int face_degree(int f) const { return static_cast<int>(face_darts_[f].size()); }
    const std::vector<Dart>& face_darts(int f) const { return face_darts_[f]; }

    // Traversal orbit starting at the basepoint.  Element i is the dart
    // leaving the i-th visited crossing; the arrival at step i is
    // alpha(traversal[i]), so the visited vertex sequence is
    // dart_vertex(alpha(t[i])).
    std::vector<Dart> traversal() const {
        std::vector<Dart> out;
        if (is_circle()) return out;
        Dart d = base_;
        do {
            out.push_back(d);
            d = succ(d);
        } while (d != base_);
        return out;
    }

    bool is_unicursal() const {
        if (is_circle()) return true;
        return traversal().size() == 2 * n_;
    }

    // Number of closed curves in the immersion (succ-orbits come in
    // forward/backward pairs).
    int curve_count() const {
        if (is_circle()) return 1;
        std::vector<char> seen(4 * n_, 0);
        int orbits = 0;
        for (Dart d = 0; d < 4 * n_; ++d) {
            if (seen[d]) continue;
            ++orbits;
            Dart e = d;
            do {
                seen[e] = 1;
                e = succ(e);
            } while (e != d);
        }
        return orbits / 2;
    }

    // One chosen direction per edge: the basepoint orbit when unicursal,
    // otherwise each curve oriented from its smallest dart.
    std::vector<char> forward_darts() const {
        std::vector<char> fwd(4 * n_, 0);
        std::vector<char> seen(4 * n_, 0);
        auto mark_orbit = [&](Dart start, std::vector<char>& v) {
            Dart e = start;
            do {
                v[e] = 1;
                e = succ(e);
            } while (e != start);
        };
        if (n_ == 0) return fwd;
        mark_orbit(base_, fwd);
        mark_orbit(base_, seen);
        // mark the reverse orbit as seen too
        mark_orbit(alpha_[base_], seen);
        for (Dart d = 0; d < 4 * n_; ++d) {
            if (seen[d]) continue;
            mark_orbit(d, fwd);
            mark_orbit(d, seen);
            mark_orbit(alpha_[d], seen);
        }
        return fwd;
    }

    CurveMap with_basepoint(Dart d) const {
        CurveMap m = *this;
        if (!is_circle()) {
            if (d >= dart_count()) throw ValidationError("basepoint out of range");
            m.base_ = d;
        }
        return m;
    }

    CurveMap with_outer(Dart d) const {
        CurveMap m = *this;
        if (!is_circle()) {
            if (d >= dart_count()) throw ValidationError("outer dart out of range");
            m.outer_ = d;
        }
        return m;
    }

    // Reverse the traversal direction; the map itself is unchanged.
    CurveMap reversed() const {
        if (is_circle()) return *this;
        return with_basepoint(alpha_[base_]);
    }

    // Reflect the map: reverse every rotation.  Slot s maps to (4-s)%4.
    CurveMap mirrored() const {
        if (is_circle()) return *this;
        auto mir = [](Dart d) { return (d & 1u) ? (d ^ 2u) : d; };
        std::vector<Dart> a(4 * n_);
        for (Dart d = 0; d < 4 * n_; ++d) a[mir(d)] = mir(alpha_[d]);
        return CurveMap(n_, std::move(a), mir(base_), mir(outer_));
    }

    // Rename vertices; perm[old] = new.  Slots are untouched.
    CurveMap relabeled(const std::vector<std::uint32_t>& perm) const {
        if (is_circle()) return *this;
        auto map = [&](Dart d) { return make_dart(perm[dart_vertex(d)], dart_slot(d)); };
        std::vector<Dart> a(4 * n_);
        for (Dart d = 0; d < 4 * n_; ++d) a[map(d)] = map(alpha_[d]);
        return CurveMap(n_, std::move(a), map(base_), map(outer_));
    }

    // Relocate the basepoint onto an edge bordering the outer face,
    // preserving the traversal direction.  *moved reports whether the
    // basepoint actually changed.
    CurveMap normalized_outer_basepoint(bool* moved = nullptr) const {
        if (moved) *moved = false;
        if (is_circle()) return *this;
        int outer = face_id_[outer_];
        if (face_id_[base_] == outer || face_id_[alpha_[base_]] == outer) return *this;
        std::vector<char> fwd(4 * n_, 0);
        for (Dart d : traversal()) fwd[d] = 1;
        Dart best = kNoDart;
        for (Dart d : face_darts_[outer]) {
            Dart cand = fwd[d] ? d : (fwd[alpha_[d]] ? alpha_[d] : kNoDart);
            if (cand != kNoDart && (best == kNoDart || cand < best)) best = cand;
        }
        if (best == kNoDart) throw ValidationError("no traversal dart on outer face");
        if (moved) *moved = true;
        return with_basepoint(best);
    }

  private:
    CurveMap() : n_(0), base_(kNoDart), outer_(kNoDart) {}

    void validate() const {
        if (n_ == 0) {
            if (!alpha_.empty()) throw ValidationError("circle must have no darts");
            return;
        }
        if (alpha_.size() != 4 * n_) throw ValidationError("alpha has wrong size");
        for (Dart d = 0; d < 4 * n_; ++d) {
            if (alpha_[d] >= 4 * n_) throw ValidationError("alpha image out of range");
            if (alpha_[d] == d) throw ValidationError("alpha not fixed-point-free");
            if (alpha_[alpha_[d]] != d) throw ValidationError("alpha not an involution");
        }
        if (base_ >= 4 * n_) throw ValidationError("basepoint out of range");
        if (outer_ >= 4 * n_) throw ValidationError("outer dart out of range");
        // connectivity over vertices through alpha
        std::vector<char> seen(n_, 0);
        std::vector<std::uint32_t> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                std::uint32_t w = dart_vertex(alpha_[make_dart(v, s)]);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != n_) throw ValidationError("not connected");
    }

    void build_faces() {
        if (n_ == 0) return;
        face_id_.assign(4 * n_, -1);
        for (Dart d = 0; d < 4 * n_; ++d) {
            if (face_id_[d] >= 0) continue;
            int f = static_cast<int>(face_reps_.size());
            face_reps_.push_back(d);
            face_darts_.emplace_back();
            Dart e = d;
            do {
                face_id_[e] = f;
                face_darts_[f].push_back(e);
                e = face_next(e);
            } while (e != d);
        }
        if (face_reps_.size() != n_ + 2)
            throw ValidationError("wrong face count (rotation system is not planar)");
    }

    std::size_t n_;
    std::vector<Dart> alpha_;
    Dart base_;
    Dart outer_;
    std::vector<int> face_id_;
    std::vector<Dart> face_reps_;
    std::vector<std::vector<Dart>> face_darts_;
};

}  // namespace curvekit
