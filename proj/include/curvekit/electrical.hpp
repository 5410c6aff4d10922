#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvekit/curve_map.hpp"
#include "curvekit/moves.hpp"
#include "curvekit/plane_graph.hpp"

namespace curvekit {

// Medial graph of a plane graph, with the correspondence tables needed
// to mirror electrical transformations as medial moves: every vertex and
// every face of g owns one face of the medial curve.
struct MedialResult {
    CurveMap curve = CurveMap::circle();
    std::vector<Dart> vertex_face;  // per g vertex: a medial dart on its face
    std::vector<Dart> face_face;    // per g face id: a medial dart on its face
};

// One medial vertex per edge of g; medial edges join consecutive edge
// ends around each vertex.  With the edge drawn from its end-0 dart, the
// medial slots are 0 upper-right, 1 upper-left, 2 lower-left, 3
// lower-right.
inline MedialResult medial(const PlaneGraph& g) {
    MedialResult out;
    if (g.is_trivial()) {
        out.vertex_face.assign(1, kNoDart);
        out.face_face.assign(1, kNoDart);
        return out;
    }
    std::size_t n = g.edge_count();
    std::vector<GDart> rep_dart(n, kNoGDart);  // end-0 dart per edge
    for (GDart d = 0; d < g.dart_count(); ++d) {
        int e = g.edge_of(d);
        if (rep_dart[e] == kNoGDart || d < rep_dart[e]) rep_dart[e] = std::min(d, g.alpha(d));
    }
    auto is_rep_end = [&](GDart d) { return d == rep_dart[g.edge_of(d)]; };
    std::vector<Dart> alpha(4 * n, kNoDart);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        int deg = g.degree(v);
        for (int k = 0; k < deg; ++k) {
            GDart a = g.dart_at(v, k);
            GDart b = g.dart_at(v, (k + 1) % deg);
            // corner between a and its ccw successor b
            Dart from = make_dart(g.edge_of(a), is_rep_end(a) ? 1 : 3);
            Dart to = make_dart(g.edge_of(b), is_rep_end(b) ? 2 : 0);
            alpha[from] = to;
            alpha[to] = from;
        }
    }
    out.vertex_face.assign(g.vertex_count(), kNoDart);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        GDart a = g.dart_at(v, 0);
        out.vertex_face[v] = make_dart(g.edge_of(a), is_rep_end(a) ? 2 : 0);
    }
    out.face_face.assign(g.face_count(), kNoDart);
    for (int f = 0; f < g.face_count(); ++f) {
        GDart d = g.face_rep(f);
        out.face_face[f] = make_dart(g.edge_of(d), is_rep_end(d) ? 3 : 1);
    }
    Dart outer = out.face_face[g.outer_face()];
    out.curve = CurveMap(n, std::move(alpha), outer, outer);
    return out;
}

enum class ElectricalKind { leaf, loop, series, parallel, y_to_delta, delta_to_y };

inline const char* electrical_kind_name(ElectricalKind k) {
    switch (k) {
        case ElectricalKind::leaf: return "leaf";
        case ElectricalKind::loop: return "loop";
        case ElectricalKind::series: return "series";
        case ElectricalKind::parallel: return "parallel";
        case ElectricalKind::y_to_delta: return "y-delta";
        case ElectricalKind::delta_to_y: return "delta-y";
    }
    return "?";
}

// vertex is set for leaf/series/y_to_delta, face_rep for the face kinds.
struct ElectricalSite {
    ElectricalKind kind;
    std::uint32_t vertex = 0;
    GDart face_rep = kNoGDart;
};

inline std::vector<ElectricalSite> enumerate_electrical(const PlaneGraph& g) {
    std::vector<ElectricalSite> sites;
    if (g.is_trivial()) return sites;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        int deg = g.degree(v);
        bool has_loop = false;
        for (GDart d : g.rotation(v))
            if (g.vertex_of(g.alpha(d)) == v) has_loop = true;
        if (deg == 1) sites.push_back({ElectricalKind::leaf, v, kNoGDart});
        if (deg == 2 && !has_loop) sites.push_back({ElectricalKind::series, v, kNoGDart});
        if (deg == 3 && !has_loop) sites.push_back({ElectricalKind::y_to_delta, v, kNoGDart});
    }
    for (int f = 0; f < g.face_count(); ++f) {
        int deg = g.face_degree(f);
        const auto& darts = g.face_darts(f);
        if (deg == 1) sites.push_back({ElectricalKind::loop, 0, g.face_rep(f)});
        if (deg == 2 && g.edge_of(darts[0]) != g.edge_of(darts[1]))
            sites.push_back({ElectricalKind::parallel, 0, g.face_rep(f)});
        if (deg == 3) {
            int e0 = g.edge_of(darts[0]), e1 = g.edge_of(darts[1]), e2 = g.edge_of(darts[2]);
            if (e0 != e1 && e1 != e2 && e0 != e2)
                sites.push_back({ElectricalKind::delta_to_y, 0, g.face_rep(f)});
        }
    }
    return sites;
}

namespace detail {

// Rebuild a plane graph from rotation lists whose entries are either
// surviving old darts (>= 0) or new darts -(k+1); `new_pairs` wires the
// new darts (entries may be old ids too).  Old edges keep their labels.
inline PlaneGraph rebuild_graph(const PlaneGraph& g,
                                const std::vector<std::vector<std::int64_t>>& rot,
                                const std::vector<std::pair<std::int64_t, std::int64_t>>& new_pairs) {
    PlaneGraph::Raw raw;
    std::size_t nd = 0;
    for (const auto& r : rot) nd += r.size();
    raw.rot.resize(rot.size());
    raw.alpha.assign(nd, kNoGDart);
    raw.edge_of.assign(nd, -1);
    std::map<std::int64_t, GDart> id;
    GDart next = 0;
    for (std::size_t v = 0; v < rot.size(); ++v)
        for (std::int64_t tok : rot[v]) {
            if (id.count(tok)) throw ValidationError("rebuild token used twice");
            id[tok] = next;
            raw.rot[v].push_back(next);
            ++next;
        }
    raw.next_label = g.next_label();
    std::map<long long, int> edge_index;  // label -> new edge index
    auto edge_for_label = [&](long long label) {
        auto it = edge_index.find(label);
        if (it != edge_index.end()) return it->second;
        int e = static_cast<int>(raw.edge_labels.size());
        raw.edge_labels.push_back(label);
        edge_index[label] = e;
        return e;
    };
    for (auto& [tok, d] : id) {
        if (tok < 0) continue;
        GDart old = static_cast<GDart>(tok);
        std::int64_t partner = static_cast<std::int64_t>(g.alpha(old));
        auto it = id.find(partner);
        if (it == id.end()) throw ValidationError("rebuild dropped half an edge");
        raw.alpha[d] = it->second;
        raw.edge_of[d] = edge_for_label(g.edge_label(g.edge_of(old)));
    }
    for (auto [a, b] : new_pairs) {
        auto ia = id.find(a), ib = id.find(b);
        if (ia == id.end() || ib == id.end()) throw ValidationError("rebuild pair references unknown dart");
        raw.alpha[ia->second] = ib->second;
        raw.alpha[ib->second] = ia->second;
        int e = edge_for_label(raw.next_label++);
        raw.edge_of[ia->second] = e;
        raw.edge_of[ib->second] = e;
    }
    // outer: first surviving dart of the old outer face, else dart 0
    raw.outer = nd ? 0 : kNoGDart;
    if (!g.is_trivial() && nd) {
        for (GDart d : g.face_darts(g.outer_face())) {
            auto it = id.find(static_cast<std::int64_t>(d));
            if (it != id.end()) {
                raw.outer = it->second;
                break;
            }
        }
    }
    return PlaneGraph(std::move(raw));
}

}  // namespace detail

// Contract a non-loop edge: the far endpoint's rotation is spliced into
// the near one where the edge sat.
inline PlaneGraph contract_edge(const PlaneGraph& g, int e) {
    auto [d0, d1] = g.edge_darts(e);
    std::uint32_t u = g.vertex_of(d0), w = g.vertex_of(d1);
    if (u == w) throw ValidationError("cannot contract a loop");
    std::vector<std::vector<std::int64_t>> rot;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        if (v == w) continue;
        std::vector<std::int64_t> r;
        for (GDart d : g.rotation(v)) {
            if (v == u && d == d0) {
                GDart x = g.rotate(d1);
                while (x != d1) {
                    r.push_back(static_cast<std::int64_t>(x));
                    x = g.rotate(x);
                }
            } else {
                r.push_back(static_cast<std::int64_t>(d));
            }
        }
        rot.push_back(std::move(r));
    }
    return detail::rebuild_graph(g, rot, {});
}

inline PlaneGraph delete_edge(const PlaneGraph& g, int e) {
    auto [d0, d1] = g.edge_darts(e);
    std::vector<std::vector<std::int64_t>> rot;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::int64_t> r;
        for (GDart d : g.rotation(v))
            if (d != d0 && d != d1) r.push_back(static_cast<std::int64_t>(d));
        if (!r.empty() || g.vertex_count() == 1) rot.push_back(std::move(r));
        else throw ValidationError("deletion strands a vertex");
    }
    return detail::rebuild_graph(g, rot, {});
}

inline PlaneGraph apply_electrical(const PlaneGraph& g, const ElectricalSite& site) {
    switch (site.kind) {
        case ElectricalKind::leaf: {
            if (g.degree(site.vertex) != 1) throw ValidationError("invalid site");
            return contract_edge(g, g.edge_of(g.dart_at(site.vertex, 0)));
        }
        case ElectricalKind::loop: {
            int f = g.face_of(site.face_rep);
            if (g.face_degree(f) != 1) throw ValidationError("invalid site");
            return delete_edge(g, g.edge_of(g.face_rep(f)));
        }
        case ElectricalKind::series: {
            if (g.degree(site.vertex) != 2) throw ValidationError("invalid site");
            GDart a = g.dart_at(site.vertex, 0), b = g.dart_at(site.vertex, 1);
            if (g.alpha(a) == b) throw ValidationError("invalid site");
            return contract_edge(g, std::min(g.edge_of(a), g.edge_of(b)));
        }
        case ElectricalKind::parallel: {
            int f = g.face_of(site.face_rep);
            if (g.face_degree(f) != 2) throw ValidationError("invalid site");
            const auto& darts = g.face_darts(f);
            int e0 = g.edge_of(darts[0]), e1 = g.edge_of(darts[1]);
            if (e0 == e1) throw ValidationError("invalid site");
            return delete_edge(g, std::min(e0, e1));
        }
        case ElectricalKind::y_to_delta: {
            std::uint32_t v = site.vertex;
            if (g.degree(v) != 3) throw ValidationError("invalid site");
            std::array<GDart, 3> a, b;
            for (int i = 0; i < 3; ++i) {
                a[i] = g.dart_at(v, i);
                b[i] = g.alpha(a[i]);
                if (g.vertex_of(b[i]) == v) throw ValidationError("invalid site");
            }
            // new triangle edge f_i joins neighbor i to neighbor i+1;
            // token -(2i+1) is its end at n_i, -(2i+2) at n_{i+1}
            auto end_at_lo = [&](int i) { return static_cast<std::int64_t>(-(2 * i + 1)); };
            auto end_at_hi = [&](int i) { return static_cast<std::int64_t>(-(2 * i + 2)); };
            std::vector<std::vector<std::int64_t>> rot;
            for (std::uint32_t x = 0; x < g.vertex_count(); ++x) {
                if (x == v) continue;
                std::vector<std::int64_t> r;
                for (GDart d : g.rotation(x)) {
                    int leg = -1;
                    for (int i = 0; i < 3; ++i)
                        if (d == b[i]) leg = i;
                    if (leg < 0) {
                        r.push_back(static_cast<std::int64_t>(d));
                    } else {
                        r.push_back(end_at_lo(leg));            // toward neighbor leg+1
                        r.push_back(end_at_hi((leg + 2) % 3));  // toward neighbor leg-1
                    }
                }
                rot.push_back(std::move(r));
            }
            std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
            for (int i = 0; i < 3; ++i) pairs.push_back({end_at_lo(i), end_at_hi(i)});
            return detail::rebuild_graph(g, rot, pairs);
        }
        case ElectricalKind::delta_to_y: {
            int f = g.face_of(site.face_rep);
            if (g.face_degree(f) != 3) throw ValidationError("invalid site");
            GDart d0 = g.face_rep(f);
            std::array<GDart, 3> d{d0, g.face_next(d0), g.face_next(g.face_next(d0))};
            int e0 = g.edge_of(d[0]), e1 = g.edge_of(d[1]), e2 = g.edge_of(d[2]);
            if (e0 == e1 || e1 == e2 || e0 == e2) throw ValidationError("invalid site");
            // spoke k joins vertex(d[k]) to the new hub; -(k+1) is the
            // vertex end, -(k+4) the hub end
            std::vector<std::vector<std::int64_t>> rot;
            for (std::uint32_t x = 0; x < g.vertex_count(); ++x) {
                std::vector<std::int64_t> r;
                for (GDart dd : g.rotation(x)) {
                    int corner = -1, dropped = 0;
                    for (int k = 0; k < 3; ++k) {
                        if (dd == d[k]) corner = k;
                        if (dd == g.alpha(d[k])) dropped = 1;
                    }
                    if (corner >= 0)
                        r.push_back(static_cast<std::int64_t>(-(corner + 1)));
                    else if (!dropped)
                        r.push_back(static_cast<std::int64_t>(dd));
                }
                rot.push_back(std::move(r));
            }
            rot.push_back({-4, -6, -5});  // hub: toward v0, v2, v1
            std::vector<std::pair<std::int64_t, std::int64_t>> pairs{{-1, -4}, {-2, -5}, {-3, -6}};
            return detail::rebuild_graph(g, rot, pairs);
        }
    }
    throw ValidationError("unsupported kind");
}

// The medial move mirroring an electrical site, located through the
// correspondence tables of `medial`.
inline MoveSite medial_site(const PlaneGraph& g, const MedialResult& med, const ElectricalSite& site) {
    MoveKind kind;
    Dart where;
    switch (site.kind) {
        case ElectricalKind::leaf: kind = MoveKind::r1_down; where = med.vertex_face[site.vertex]; break;
        case ElectricalKind::series: kind = MoveKind::m2to1; where = med.vertex_face[site.vertex]; break;
        case ElectricalKind::y_to_delta: kind = MoveKind::r3; where = med.vertex_face[site.vertex]; break;
        case ElectricalKind::loop: kind = MoveKind::r1_down; where = med.face_face[g.face_of(site.face_rep)]; break;
        case ElectricalKind::parallel: kind = MoveKind::m2to1; where = med.face_face[g.face_of(site.face_rep)]; break;
        case ElectricalKind::delta_to_y: kind = MoveKind::r3; where = med.face_face[g.face_of(site.face_rep)]; break;
        default: throw ValidationError("unsupported kind");
    }
    return {kind, med.curve.face_rep(med.curve.face_of(where)), kNoDart};
}

}  // namespace curvekit
