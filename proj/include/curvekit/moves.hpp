#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvekit/curve_map.hpp"
#include "curvekit/gauss.hpp"

namespace curvekit {

// Homotopy moves plus the two medial electrical variants.  2->1
// contracts an empty bigon to a crossing; 1->2 is its inverse.
enum class MoveKind { r1_down, r1_up, r2_down, r2_up, r3, m2to1, m1to2 };

inline const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::r1_down: return "1->0";
        case MoveKind::r1_up: return "0->1";
        case MoveKind::r2_down: return "2->0";
        case MoveKind::r2_up: return "0->2";
        case MoveKind::r3: return "3->3";
        case MoveKind::m2to1: return "2->1";
        case MoveKind::m1to2: return "1->2";
    }
    return "?";
}

// Location data per kind:
//   r1_down / r2_down / m2to1 / r3:  a = smallest dart of the face
//   r1_up:  a = traversal dart of the host edge (kNoDart on the circle),
//           b = chirality (0 loop right of travel, 1 loop left)
//   r2_up:  a, b = ordered pair of darts on a common face
//   m1to2:  a = (vertex, axis) with axis 0 or 1
struct MoveSite {
    MoveKind kind;
    Dart a = kNoDart;
    Dart b = kNoDart;
};

struct MoveStep {
    MoveSite site;
    std::optional<int> defect_before;
    std::optional<int> defect_after;
    int n_after = 0;
};

struct MoveTrace {
    CurveMap initial = CurveMap::circle();
    std::vector<MoveStep> steps;
    CurveMap final_map = CurveMap::circle();
    bool completed = false;
};

namespace detail {

// Remove a set of vertices, rejoining strands through them according to
// `pairing` (a partial involution on the removed vertices' darts).
// Removed darts without a pairing entry must be interior to a deleted
// feature and are dropped.  Closed strands that never touch a surviving
// vertex are counted as free circles.
struct SpliceResult {
    std::size_t new_n = 0;
    std::vector<Dart> alpha;
    std::vector<std::int32_t> vertex_map;  // old vertex -> new vertex or -1
    int free_circles = 0;

    Dart reloc(Dart d) const {
        std::int32_t v = vertex_map[dart_vertex(d)];
        return v < 0 ? kNoDart : make_dart(static_cast<std::uint32_t>(v), dart_slot(d));
    }
};

inline SpliceResult splice_out(const CurveMap& m, const std::vector<std::uint32_t>& removed,
                               const std::vector<std::pair<Dart, Dart>>& pairing) {
    SpliceResult res;
    std::vector<char> gone(m.vertex_count(), 0);
    for (std::uint32_t v : removed) gone[v] = 1;
    res.vertex_map.assign(m.vertex_count(), -1);
    for (std::uint32_t v = 0; v < m.vertex_count(); ++v)
        if (!gone[v]) res.vertex_map[v] = static_cast<std::int32_t>(res.new_n++);

    std::vector<Dart> pair(m.dart_count(), kNoDart);
    for (auto [d, e] : pairing) {
        pair[d] = e;
        pair[e] = d;
    }
    std::vector<char> reached(m.dart_count(), 0);
    res.alpha.assign(4 * res.new_n, kNoDart);
    for (Dart u = 0; u < m.dart_count(); ++u) {
        if (gone[dart_vertex(u)]) continue;
        Dart e = m.alpha(u);
        std::size_t hops = 0;
        while (gone[dart_vertex(e)]) {
            reached[e] = 1;
            if (pair[e] == kNoDart) throw ValidationError("splice reached an unpaired dart");
            reached[pair[e]] = 1;
            e = m.alpha(pair[e]);
            if (++hops > m.dart_count()) throw ValidationError("splice does not terminate");
        }
        res.alpha[res.reloc(u)] = res.reloc(e);
    }
    for (Dart d = 0; d < m.dart_count(); ++d) {
        if (!gone[dart_vertex(d)] || reached[d] || pair[d] == kNoDart) continue;
        ++res.free_circles;
        Dart e = d;
        do {
            reached[e] = 1;
            reached[pair[e]] = 1;
            e = m.alpha(pair[e]);
        } while (e != d);
    }
    return res;
}

// First dart of the old face orbit that survives relocation.
template <typename Reloc>
Dart relocate_face_rep(const CurveMap& m, int face, Reloc reloc) {
    for (Dart d : m.face_darts(face)) {
        Dart r = reloc(d);
        if (r != kNoDart) return r;
    }
    return kNoDart;
}

// Follow the traversal from `start` to the first dart surviving `reloc`.
template <typename Reloc>
Dart chase_surviving(const CurveMap& m, Dart start, Reloc reloc) {
    Dart d = start;
    for (std::size_t i = 0; i < m.dart_count() + 1; ++i) {
        Dart r = reloc(d);
        if (r != kNoDart) return r;
        d = m.succ(d);
    }
    return kNoDart;
}

inline void require(bool cond, const char* msg) {
    if (!cond) throw ValidationError(msg);
}

inline std::array<Dart, 3> triangle_darts(const CurveMap& m, Dart rep) {
    Dart f0 = rep, f1 = m.face_next(rep), f2 = m.face_next(m.face_next(rep));
    require(m.face_next(f2) == f0, "invalid site");
    return {f0, f1, f2};
}

}  // namespace detail

// All connected pieces of a smoothing; crossing-free circles are listed
// as circle markers after the crossing-bearing components.
struct SmoothResult {
    std::vector<CurveMap> components;
    int free_circles = 0;
    int curve_components = 0;
    bool connected() const { return components.size() == 1; }
};

namespace detail {

inline std::vector<CurveMap> split_components(std::size_t n, const std::vector<Dart>& alpha,
                                              Dart outer_hint, Dart base_hint) {
    std::vector<CurveMap> out;
    if (n == 0) return out;
    std::vector<int> comp(n, -1);
    int comps = 0;
    for (std::uint32_t v0 = 0; v0 < n; ++v0) {
        if (comp[v0] >= 0) continue;
        int c = comps++;
        std::vector<std::uint32_t> stack{v0};
        comp[v0] = c;
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                std::uint32_t w = dart_vertex(alpha[make_dart(v, s)]);
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    for (int c = 0; c < comps; ++c) {
        std::vector<std::int32_t> vmap(n, -1);
        std::size_t cn = 0;
        for (std::uint32_t v = 0; v < n; ++v)
            if (comp[v] == c) vmap[v] = static_cast<std::int32_t>(cn++);
        auto reloc = [&](Dart d) {
            return vmap[dart_vertex(d)] < 0
                       ? kNoDart
                       : make_dart(static_cast<std::uint32_t>(vmap[dart_vertex(d)]), dart_slot(d));
        };
        std::vector<Dart> ca(4 * cn);
        for (std::uint32_t v = 0; v < n; ++v) {
            if (comp[v] != c) continue;
            for (int s = 0; s < 4; ++s) ca[reloc(make_dart(v, s))] = reloc(alpha[make_dart(v, s)]);
        }
        Dart base = (base_hint != kNoDart && comp[dart_vertex(base_hint)] == c) ? reloc(base_hint) : 0;
        Dart outer = (outer_hint != kNoDart && comp[dart_vertex(outer_hint)] == c) ? reloc(outer_hint) : 0;
        out.emplace_back(cn, std::move(ca), base, outer);
    }
    return out;
}

}  // namespace detail

// Replace crossing x by two disjoint strands.  Choice 0 joins slot pairs
// (0,1) and (2,3); choice 1 joins (1,2) and (3,0).
inline SmoothResult smooth(const CurveMap& m, std::uint32_t x, int choice) {
    detail::require(!m.is_circle() && x < m.vertex_count(), "crossing out of range");
    std::vector<std::pair<Dart, Dart>> pairing;
    if (choice == 0)
        pairing = {{make_dart(x, 0), make_dart(x, 1)}, {make_dart(x, 2), make_dart(x, 3)}};
    else
        pairing = {{make_dart(x, 1), make_dart(x, 2)}, {make_dart(x, 3), make_dart(x, 0)}};
    detail::SpliceResult sp = detail::splice_out(m, {x}, pairing);
    auto reloc = [&](Dart d) { return sp.reloc(d); };
    Dart outer_hint = detail::relocate_face_rep(m, m.outer_face(), reloc);
    Dart base_hint = detail::chase_surviving(m, m.basepoint(), reloc);
    SmoothResult res;
    res.components = detail::split_components(sp.new_n, sp.alpha, outer_hint, base_hint);
    res.free_circles = sp.free_circles;
    for (int i = 0; i < sp.free_circles; ++i) res.components.push_back(CurveMap::circle());
    res.curve_components = sp.free_circles;
    for (const CurveMap& c : res.components)
        if (!c.is_circle()) res.curve_components += c.curve_count();
    return res;
}

namespace detail {

inline CurveMap apply_r1_down(const CurveMap& m, const MoveSite& site) {
    require(!m.is_circle() && site.a < m.dart_count(), "invalid site");
    int f = m.face_of(site.a);
    require(m.face_degree(f) == 1, "invalid site");
    Dart mg = m.face_rep(f);
    std::uint32_t x = dart_vertex(mg);
    if (m.vertex_count() == 1) return CurveMap::circle();
    std::uint32_t s = dart_slot(mg);
    SpliceResult sp =
        splice_out(m, {x}, {{make_dart(x, s + 1), make_dart(x, s + 2)}});
    require(sp.free_circles == 0, "invalid site");
    auto reloc = [&](Dart d) { return sp.reloc(d); };
    Dart outer = relocate_face_rep(m, m.outer_face(), reloc);
    if (outer == kNoDart) {
        // outer face was the monogon; the face across the loop absorbs it
        outer = relocate_face_rep(m, m.face_of(m.alpha(mg)), reloc);
    }
    Dart base = chase_surviving(m, m.basepoint(), reloc);
    return CurveMap(sp.new_n, std::move(sp.alpha), base, outer);
}

inline void bigon_darts(const CurveMap& m, const MoveSite& site, Dart& d1, Dart& d2) {
    require(!m.is_circle() && site.a < m.dart_count(), "invalid site");
    int f = m.face_of(site.a);
    require(m.face_degree(f) == 2, "invalid site");
    d1 = m.face_rep(f);
    d2 = m.face_next(d1);
    require(dart_vertex(d1) != dart_vertex(d2), "invalid site");
}

inline CurveMap apply_r2_down(const CurveMap& m, const MoveSite& site) {
    Dart d1, d2;
    bigon_darts(m, site, d1, d2);
    std::uint32_t x = dart_vertex(d1), y = dart_vertex(d2);
    // separate the strands: each passes straight through both former
    // crossings, so pair opposite darts
    SpliceResult sp = splice_out(m, {x, y},
                                 {{make_dart(x, 0), make_dart(x, 2)},
                                  {make_dart(x, 1), make_dart(x, 3)},
                                  {make_dart(y, 0), make_dart(y, 2)},
                                  {make_dart(y, 1), make_dart(y, 3)}});
    if (sp.new_n == 0) {
        require(sp.free_circles == 1, "move disconnects map");
        return CurveMap::circle();
    }
    require(sp.free_circles == 0, "move disconnects map");
    auto reloc = [&](Dart d) { return sp.reloc(d); };
    Dart outer = relocate_face_rep(m, m.outer_face(), reloc);
    if (outer == kNoDart) outer = relocate_face_rep(m, m.face_of(m.alpha(d1)), reloc);
    if (outer == kNoDart) outer = relocate_face_rep(m, m.face_of(m.alpha(d2)), reloc);
    require(outer != kNoDart, "invalid site");
    Dart base = chase_surviving(m, m.basepoint(), reloc);
    return CurveMap(sp.new_n, std::move(sp.alpha), base, outer);
}

inline CurveMap apply_m2to1(const CurveMap& m, const MoveSite& site) {
    Dart d1, d2;
    bigon_darts(m, site, d1, d2);
    std::uint32_t x = dart_vertex(d1), y = dart_vertex(d2);
    std::uint32_t s = dart_slot(d1), t = dart_slot(d2);
    std::size_t new_n = m.vertex_count() - 1;
    std::uint32_t z = static_cast<std::uint32_t>(new_n - 1);

    std::vector<std::int32_t> vmap(m.vertex_count(), -1);
    std::size_t next = 0;
    for (std::uint32_t v = 0; v < m.vertex_count(); ++v)
        if (v != x && v != y) vmap[v] = static_cast<std::int32_t>(next++);

    // the four strand ends around the collapsed bigon, in rotation order
    std::array<Dart, 4> port_of = {make_dart(y, t + 2), make_dart(x, s + 1), make_dart(x, s + 2),
                                   make_dart(y, t + 1)};
    auto resolve = [&](Dart d) -> Dart {
        for (int k = 0; k < 4; ++k)
            if (port_of[k] == d) return make_dart(z, k);
        std::uint32_t v = dart_vertex(d);
        require(vmap[v] >= 0, "splice reached an interior dart");
        return make_dart(static_cast<std::uint32_t>(vmap[v]), dart_slot(d));
    };
    std::vector<Dart> alpha(4 * new_n, kNoDart);
    for (Dart u = 0; u < m.dart_count(); ++u) {
        if (vmap[dart_vertex(u)] < 0) continue;
        alpha[resolve(u)] = resolve(m.alpha(u));
    }
    for (int k = 0; k < 4; ++k) {
        Dart e = m.alpha(port_of[k]);
        alpha[make_dart(z, k)] = resolve(e);
    }
    auto reloc = [&](Dart d) -> Dart {
        std::uint32_t v = dart_vertex(d);
        return vmap[v] < 0 ? kNoDart : make_dart(static_cast<std::uint32_t>(vmap[v]), dart_slot(d));
    };
    Dart outer = relocate_face_rep(m, m.outer_face(), reloc);
    if (outer == kNoDart) outer = make_dart(z, 0);
    Dart base = chase_surviving(m, m.basepoint(), reloc);
    if (base == kNoDart) base = make_dart(z, 0);
    return CurveMap(new_n, std::move(alpha), base, outer);
}

inline CurveMap apply_m1to2(const CurveMap& m, const MoveSite& site) {
    require(!m.is_circle() && site.a < m.dart_count(), "invalid site");
    std::uint32_t zold = dart_vertex(site.a);
    std::uint32_t axis = dart_slot(site.a) & 1u;
    std::size_t new_n = m.vertex_count() + 1;
    std::uint32_t xv = static_cast<std::uint32_t>(new_n - 2);
    std::uint32_t yv = static_cast<std::uint32_t>(new_n - 1);

    std::vector<std::int32_t> vmap(m.vertex_count(), -1);
    std::size_t next = 0;
    for (std::uint32_t v = 0; v < m.vertex_count(); ++v)
        if (v != zold) vmap[v] = static_cast<std::int32_t>(next++);

    // inverse of the 2->1 port map, with the bigon laid out at slots
    // x:(0,3) and y:(0,3)
    std::array<Dart, 4> port_target = {make_dart(yv, 2), make_dart(xv, 1), make_dart(xv, 2),
                                       make_dart(yv, 1)};
    auto resolve = [&](Dart d) -> Dart {
        if (dart_vertex(d) == zold) return port_target[(dart_slot(d) - axis) & 3u];
        return make_dart(static_cast<std::uint32_t>(vmap[dart_vertex(d)]), dart_slot(d));
    };
    std::vector<Dart> alpha(4 * new_n, kNoDart);
    for (Dart u = 0; u < m.dart_count(); ++u) {
        if (dart_vertex(u) == zold) continue;
        alpha[resolve(u)] = resolve(m.alpha(u));
    }
    for (int k = 0; k < 4; ++k) {
        Dart from = port_target[k];
        alpha[from] = resolve(m.alpha(make_dart(zold, axis + k)));
    }
    // bigon edges
    alpha[make_dart(xv, 0)] = make_dart(yv, 3);
    alpha[make_dart(yv, 3)] = make_dart(xv, 0);
    alpha[make_dart(yv, 0)] = make_dart(xv, 3);
    alpha[make_dart(xv, 3)] = make_dart(yv, 0);

    auto reloc = [&](Dart d) -> Dart {
        std::uint32_t v = dart_vertex(d);
        return v == zold ? kNoDart : make_dart(static_cast<std::uint32_t>(vmap[v]), dart_slot(d));
    };
    Dart outer = relocate_face_rep(m, m.outer_face(), reloc);
    if (outer == kNoDart) outer = make_dart(xv, 1);
    Dart base = chase_surviving(m, m.basepoint(), reloc);
    if (base == kNoDart) base = make_dart(xv, 1);
    return CurveMap(new_n, std::move(alpha), base, outer);
}

inline CurveMap apply_r3(const CurveMap& m, const MoveSite& site) {
    require(!m.is_circle() && site.a < m.dart_count(), "invalid site");
    int fid = m.face_of(site.a);
    require(m.face_degree(fid) == 3, "invalid site");
    std::array<Dart, 3> f = triangle_darts(m, m.face_rep(fid));
    std::array<std::uint32_t, 3> v, s;
    for (int k = 0; k < 3; ++k) {
        v[k] = dart_vertex(f[k]);
        s[k] = dart_slot(f[k]);
    }
    require(v[0] != v[1] && v[1] != v[2] && v[0] != v[2], "invalid site");
    std::array<Dart, 3> p, q, P, Q;
    for (int k = 0; k < 3; ++k) {
        p[k] = make_dart(v[k], s[k] + 1);
        q[k] = make_dart(v[k], s[k] + 2);
        P[k] = m.alpha(p[k]);
        Q[k] = m.alpha(q[k]);
    }
    auto relocated = [&](Dart d) -> Dart {
        for (int j = 0; j < 3; ++j) {
            if (d == p[j]) return make_dart(v[(j + 2) % 3], s[(j + 2) % 3]);
            if (d == q[j]) return make_dart(v[(j + 1) % 3], s[(j + 1) % 3] + 3);
        }
        return d;
    };
    std::vector<Dart> alpha(m.dart_count());
    for (Dart d = 0; d < m.dart_count(); ++d) alpha[d] = m.alpha(d);
    auto assign = [&](Dart a, Dart b) {
        alpha[a] = b;
        alpha[b] = a;
    };
    for (int k = 0; k < 3; ++k) {
        int km = (k + 2) % 3, kp = (k + 1) % 3;
        assign(make_dart(v[k], s[k] + 1), make_dart(v[km], s[km] + 2));  // new triangle
        assign(make_dart(v[k], s[k] + 3), relocated(Q[km]));
        assign(make_dart(v[k], s[k]), relocated(P[kp]));
    }
    return CurveMap(m.vertex_count(), std::move(alpha), m.basepoint(), m.outer_rep());
}

inline CurveMap apply_r1_up(const CurveMap& m, const MoveSite& site) {
    std::uint32_t chirality = static_cast<std::uint32_t>(site.b) & 1u;
    if (m.is_circle()) {
        std::vector<Dart> alpha(4);
        if (chirality == 0) {
            alpha[0] = 1; alpha[1] = 0; alpha[2] = 3; alpha[3] = 2;
        } else {
            alpha[1] = 2; alpha[2] = 1; alpha[3] = 0; alpha[0] = 3;
        }
        return CurveMap(1, std::move(alpha), 0, 0);
    }
    require(site.a < m.dart_count(), "invalid site");
    Dart e = site.a;
    Dart f = m.alpha(e);
    std::uint32_t x = static_cast<std::uint32_t>(m.vertex_count());
    std::vector<Dart> alpha(4 * (m.vertex_count() + 1));
    for (Dart d = 0; d < m.dart_count(); ++d) alpha[d] = m.alpha(d);
    // travel direction e -> f; the curl sits just before f
    if (chirality == 0) {  // loop on the right of travel
        alpha[e] = make_dart(x, 1);
        alpha[make_dart(x, 1)] = e;
        alpha[make_dart(x, 0)] = f;
        alpha[f] = make_dart(x, 0);
        alpha[make_dart(x, 2)] = make_dart(x, 3);
        alpha[make_dart(x, 3)] = make_dart(x, 2);
    } else {  // loop on the left
        alpha[e] = make_dart(x, 3);
        alpha[make_dart(x, 3)] = e;
        alpha[make_dart(x, 0)] = f;
        alpha[f] = make_dart(x, 0);
        alpha[make_dart(x, 1)] = make_dart(x, 2);
        alpha[make_dart(x, 2)] = make_dart(x, 1);
    }
    return CurveMap(m.vertex_count() + 1, std::move(alpha), m.basepoint(), m.outer_rep());
}

inline CurveMap apply_r2_up(const CurveMap& m, const MoveSite& site) {
    require(!m.is_circle(), "invalid site");
    require(site.a < m.dart_count() && site.b < m.dart_count(), "invalid site");
    Dart a = site.a, b = site.b;
    require(m.face_of(a) == m.face_of(b), "invalid site");
    require(a != b && a != m.alpha(b), "invalid site");
    Dart aa = m.alpha(a), ab = m.alpha(b);
    std::uint32_t x1 = static_cast<std::uint32_t>(m.vertex_count());
    std::uint32_t x2 = x1 + 1;
    std::vector<Dart> alpha(4 * (m.vertex_count() + 2));
    for (Dart d = 0; d < m.dart_count(); ++d) alpha[d] = m.alpha(d);
    auto assign = [&](Dart u, Dart w) {
        alpha[u] = w;
        alpha[w] = u;
    };
    // push a finger of edge(a) across edge(b) through the shared face
    assign(a, make_dart(x1, 2));
    assign(make_dart(x1, 0), make_dart(x2, 0));
    assign(make_dart(x1, 1), make_dart(x2, 3));
    assign(make_dart(x1, 3), ab);
    assign(b, make_dart(x2, 1));
    assign(make_dart(x2, 2), aa);
    return CurveMap(m.vertex_count() + 2, std::move(alpha), m.basepoint(), m.outer_rep());
}

}  // namespace detail

inline CurveMap apply_move(const CurveMap& m, const MoveSite& site) {
    switch (site.kind) {
        case MoveKind::r1_down: return detail::apply_r1_down(m, site);
        case MoveKind::r1_up: return detail::apply_r1_up(m, site);
        case MoveKind::r2_down: return detail::apply_r2_down(m, site);
        case MoveKind::r2_up: return detail::apply_r2_up(m, site);
        case MoveKind::r3: return detail::apply_r3(m, site);
        case MoveKind::m2to1: return detail::apply_m2to1(m, site);
        case MoveKind::m1to2: return detail::apply_m1to2(m, site);
    }
    throw ValidationError("unsupported kind");
}

inline std::vector<MoveSite> enumerate_moves(const CurveMap& m, const std::vector<MoveKind>& kinds) {
    std::vector<MoveSite> sites;
    auto wants = [&](MoveKind k) {
        for (MoveKind w : kinds)
            if (w == k) return true;
        return false;
    };
    if (m.is_circle()) {
        if (wants(MoveKind::r1_up)) {
            sites.push_back({MoveKind::r1_up, kNoDart, 0});
            sites.push_back({MoveKind::r1_up, kNoDart, 1});
        }
        return sites;
    }
    for (int f = 0; f < m.face_count(); ++f) {
        int deg = m.face_degree(f);
        Dart rep = m.face_rep(f);
        if (deg == 1 && wants(MoveKind::r1_down)) sites.push_back({MoveKind::r1_down, rep, kNoDart});
        if (deg == 2) {
            Dart d2 = m.face_next(rep);
            if (dart_vertex(rep) != dart_vertex(d2)) {
                if (wants(MoveKind::r2_down)) sites.push_back({MoveKind::r2_down, rep, kNoDart});
                if (wants(MoveKind::m2to1)) sites.push_back({MoveKind::m2to1, rep, kNoDart});
            }
        }
        if (deg == 3 && wants(MoveKind::r3)) {
            auto f3 = detail::triangle_darts(m, rep);
            std::uint32_t a = dart_vertex(f3[0]), b = dart_vertex(f3[1]), c = dart_vertex(f3[2]);
            if (a != b && b != c && a != c) sites.push_back({MoveKind::r3, rep, kNoDart});
        }
    }
    if (wants(MoveKind::r1_up)) {
        for (Dart d : m.traversal())
            for (Dart chi = 0; chi < 2; ++chi) sites.push_back({MoveKind::r1_up, d, chi});
    }
    if (wants(MoveKind::r2_up)) {
        for (int f = 0; f < m.face_count(); ++f)
            for (Dart a : m.face_darts(f))
                for (Dart b : m.face_darts(f))
                    if (a != b && a != m.alpha(b)) sites.push_back({MoveKind::r2_up, a, b});
    }
    if (wants(MoveKind::m1to2)) {
        for (std::uint32_t v = 0; v < m.vertex_count(); ++v)
            for (std::uint32_t axis = 0; axis < 2; ++axis)
                sites.push_back({MoveKind::m1to2, make_dart(v, axis), kNoDart});
    }
    return sites;
}

// Defect change of a decreasing or 3->3 homotopy move, straight from the
// interleaving patterns; increasing kinds are computed by recomputation.
inline int predict_delta(const CurveMap& m, const MoveSite& site) {
    if (site.kind == MoveKind::r1_down) return 0;
    if (site.kind == MoveKind::r2_down) {
        Dart d1, d2;
        detail::bigon_darts(m, site, d1, d2);
        SignedGaussCode code = gauss_code(m);
        return interleaved(code, dart_vertex(d1), dart_vertex(d2)) ? -2 : 0;
    }
    if (site.kind == MoveKind::r3) {
        int fid = m.face_of(site.a);
        detail::require(m.face_degree(fid) == 3, "invalid site");
        auto f = detail::triangle_darts(m, m.face_rep(fid));
        SignedGaussCode code = gauss_code(m);
        int pairs = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (interleaved(code, dart_vertex(f[i]), dart_vertex(f[j]))) ++pairs;
        return pairs % 2 == 0 ? 2 : -2;
    }
    throw ValidationError("unsupported kind");
}

}  // namespace curvekit
