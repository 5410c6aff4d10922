#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curvekit/canonical.hpp"
#include "curvekit/defect.hpp"
#include "curvekit/electrical.hpp"
#include "curvekit/moves.hpp"

namespace curvekit {

enum class MoveFamily { homotopy, medial_electrical };

inline const char* move_family_name(MoveFamily f) {
    return f == MoveFamily::homotopy ? "homotopy" : "medial";
}

namespace detail {

inline std::vector<MoveKind> decreasing_kinds(MoveFamily family) {
    return family == MoveFamily::homotopy
               ? std::vector<MoveKind>{MoveKind::r1_down, MoveKind::r2_down}
               : std::vector<MoveKind>{MoveKind::r1_down, MoveKind::m2to1};
}

inline bool has_decreasing_site(const CurveMap& m, MoveFamily family) {
    return !enumerate_moves(m, decreasing_kinds(family)).empty();
}

// Shortest 3->3 path to a map with a decreasing site, breadth-first over
// canonical forms.
inline std::optional<std::vector<MoveSite>> triangle_path_to_decreaser(const CurveMap& start,
                                                                       MoveFamily family,
                                                                       std::size_t state_budget) {
    struct Node {
        CurveMap map;
        int parent;
        MoveSite via;
    };
    std::vector<Node> nodes{{start, -1, MoveSite{MoveKind::r3, kNoDart, kNoDart}}};
    std::set<std::string> seen{canonical_form(start, true)};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const MoveSite& s : enumerate_moves(nodes[cur].map, {MoveKind::r3})) {
            CurveMap next = apply_move(nodes[cur].map, s);
            std::string key = canonical_form(next, true);
            if (!seen.insert(key).second) continue;
            nodes.push_back({next, cur, s});
            int idx = static_cast<int>(nodes.size() - 1);
            if (has_decreasing_site(next, family)) {
                std::vector<MoveSite> path;
                for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent) path.push_back(nodes[i].via);
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (nodes.size() > state_budget) return std::nullopt;
            queue.push_back(idx);
        }
    }
    return std::nullopt;
}

inline std::optional<int> maybe_defect(const CurveMap& m) {
    if (!m.is_unicursal()) return std::nullopt;
    return defect_polyak(m);
}

}  // namespace detail

// Greedy reduction to the circle: take any decreasing move, otherwise a
// 3->3 flip that creates one (ties by smallest canonical key), otherwise
// breadth-first search through 3->3 space for the nearest decreaser.
inline MoveTrace reduce_curve(const CurveMap& input, MoveFamily family, long long max_steps = -1) {
    MoveTrace trace;
    trace.initial = input;
    if (max_steps < 0)
        max_steps = 5 * static_cast<long long>(input.vertex_count()) * input.vertex_count() + 32;
    CurveMap m = input;
    std::optional<int> defect = detail::maybe_defect(m);
    auto step = [&](const MoveSite& site) {
        CurveMap next = apply_move(m, site);
        std::optional<int> next_defect = detail::maybe_defect(next);
        trace.steps.push_back({site, defect, next_defect, static_cast<int>(next.vertex_count())});
        m = next;
        defect = next_defect;
    };
    while (!m.is_circle() && static_cast<long long>(trace.steps.size()) < max_steps) {
        auto dec = enumerate_moves(m, detail::decreasing_kinds(family));
        if (!dec.empty()) {
            MoveSite best = dec[0];
            for (const MoveSite& s : dec)
                if (s.kind == MoveKind::r1_down) {
                    best = s;
                    break;
                }
            step(best);
            continue;
        }
        auto flips = enumerate_moves(m, {MoveKind::r3});
        MoveSite best{};
        std::string best_key;
        bool found = false;
        for (const MoveSite& s : flips) {
            CurveMap next = apply_move(m, s);
            if (!detail::has_decreasing_site(next, family)) continue;
            std::string key = canonical_form(next, true);
            if (!found || key < best_key) {
                found = true;
                best = s;
                best_key = key;
            }
        }
        if (found) {
            step(best);
            continue;
        }
        auto path = detail::triangle_path_to_decreaser(m, family, 200000);
        if (!path) break;
        for (const MoveSite& s : *path) {
            if (static_cast<long long>(trace.steps.size()) >= max_steps) break;
            step(s);
        }
    }
    trace.final_map = m;
    trace.completed = m.is_circle();
    return trace;
}

struct ElectricalStep {
    ElectricalSite site;
    std::optional<int> medial_defect_before;
    std::optional<int> medial_defect_after;
    std::size_t vertices_after = 0;
    std::size_t edges_after = 0;
};

struct ElectricalTrace {
    PlaneGraph initial = PlaneGraph::trivial();
    std::vector<ElectricalStep> steps;
    PlaneGraph final_graph = PlaneGraph::trivial();
    bool completed = false;
};

namespace detail {

inline bool has_electrical_decreaser(const PlaneGraph& g) {
    for (const auto& s : enumerate_electrical(g))
        if (s.kind != ElectricalKind::y_to_delta && s.kind != ElectricalKind::delta_to_y) return true;
    return false;
}

inline std::vector<ElectricalSite> delta_wye_sites(const PlaneGraph& g) {
    std::vector<ElectricalSite> out;
    for (const auto& s : enumerate_electrical(g))
        if (s.kind == ElectricalKind::y_to_delta || s.kind == ElectricalKind::delta_to_y)
            out.push_back(s);
    return out;
}

inline std::optional<std::vector<ElectricalSite>> delta_wye_path_to_decreaser(
    const PlaneGraph& start, std::size_t state_budget) {
    struct Node {
        PlaneGraph graph;
        int parent;
        ElectricalSite via;
    };
    std::vector<Node> nodes{{start, -1, {}}};
    std::set<std::string> seen{canonical_form(start, true)};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const ElectricalSite& s : delta_wye_sites(nodes[cur].graph)) {
            PlaneGraph next = apply_electrical(nodes[cur].graph, s);
            std::string key = canonical_form(next, true);
            if (!seen.insert(key).second) continue;
            nodes.push_back({next, cur, s});
            int idx = static_cast<int>(nodes.size() - 1);
            if (has_electrical_decreaser(next)) {
                std::vector<ElectricalSite> path;
                for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent) path.push_back(nodes[i].via);
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (nodes.size() > state_budget) return std::nullopt;
            queue.push_back(idx);
        }
    }
    return std::nullopt;
}

inline std::optional<int> maybe_medial_defect(const PlaneGraph& g) {
    if (g.is_trivial()) return 0;
    CurveMap med = medial(g).curve;
    if (!med.is_unicursal()) return std::nullopt;
    return defect_polyak(med);
}

}  // namespace detail

// Greedy facial electrical reduction to a single vertex, with priority
// leaf > loop > series > parallel and delta-wye flips chosen to expose a
// new decreaser.
inline ElectricalTrace reduce_graph(const PlaneGraph& input, long long max_steps = -1) {
    ElectricalTrace trace;
    trace.initial = input;
    if (max_steps < 0)
        max_steps = 5 * static_cast<long long>(input.vertex_count()) * input.vertex_count() + 32;
    PlaneGraph g = input;
    std::optional<int> defect = detail::maybe_medial_defect(g);
    auto step = [&](const ElectricalSite& site) {
        PlaneGraph next = apply_electrical(g, site);
        std::optional<int> next_defect = detail::maybe_medial_defect(next);
        trace.steps.push_back({site, defect, next_defect, next.vertex_count(), next.edge_count()});
        g = next;
        defect = next_defect;
    };
    auto priority = [](ElectricalKind k) {
        switch (k) {
            case ElectricalKind::leaf: return 0;
            case ElectricalKind::loop: return 1;
            case ElectricalKind::series: return 2;
            case ElectricalKind::parallel: return 3;
            default: return 4;
        }
    };
    while (!g.is_trivial() && static_cast<long long>(trace.steps.size()) < max_steps) {
        std::vector<ElectricalSite> sites = enumerate_electrical(g);
        const ElectricalSite* best = nullptr;
        for (const auto& s : sites)
            if (priority(s.kind) < 4 && (!best || priority(s.kind) < priority(best->kind)))
                best = &s;
        if (best) {
            step(*best);
            continue;
        }
        bool found = false;
        ElectricalSite choice{};
        std::string best_key;
        for (const auto& s : detail::delta_wye_sites(g)) {
            PlaneGraph next = apply_electrical(g, s);
            if (!detail::has_electrical_decreaser(next)) continue;
            std::string key = canonical_form(next, true);
            if (!found || key < best_key) {
                found = true;
                choice = s;
                best_key = key;
            }
        }
        if (found) {
            step(choice);
            continue;
        }
        auto path = detail::delta_wye_path_to_decreaser(g, 200000);
        if (!path) break;
        for (const auto& s : *path) {
            if (static_cast<long long>(trace.steps.size()) >= max_steps) break;
            step(s);
        }
    }
    trace.final_graph = g;
    trace.completed = g.is_trivial();
    return trace;
}

struct SearchResult {
    int moves = -1;
    MoveTrace trace;
    bool exact = false;       // for homotopy, exact among cap-bounded sequences
    std::size_t states = 0;
};

// Exact minimum number of moves to reach the circle.  The medial family
// never needs increasing moves, so its search runs over {1->0, 2->1,
// 3->3} only; the homotopy family explores 0->1 and 0->2 as well, capped
// at crossing_cap intermediate crossings.
inline SearchResult min_moves_search(const CurveMap& input, MoveFamily family, int crossing_cap = -1,
                                     std::size_t state_budget = 2000000) {
    if (crossing_cap < 0) crossing_cap = static_cast<int>(input.vertex_count()) + 2;
    std::vector<MoveKind> kinds = family == MoveFamily::homotopy
                                      ? std::vector<MoveKind>{MoveKind::r1_down, MoveKind::r2_down,
                                                              MoveKind::r3, MoveKind::r1_up,
                                                              MoveKind::r2_up}
                                      : std::vector<MoveKind>{MoveKind::r1_down, MoveKind::m2to1,
                                                              MoveKind::r3};
    struct Node {
        CurveMap map;
        int parent;
        MoveSite via;
        int dist;
    };
    std::vector<Node> nodes{{input, -1, {}, 0}};
    std::map<std::string, int> seen{{canonical_form(input, true), 0}};
    std::deque<int> queue{0};
    int goal = input.is_circle() ? 0 : -1;
    while (!queue.empty() && goal < 0) {
        int cur = queue.front();
        queue.pop_front();
        for (const MoveSite& s : enumerate_moves(nodes[cur].map, kinds)) {
            CurveMap next = apply_move(nodes[cur].map, s);
            if (static_cast<int>(next.vertex_count()) > crossing_cap) continue;
            std::string key = canonical_form(next, true);
            if (seen.count(key)) continue;
            nodes.push_back({next, cur, s, nodes[cur].dist + 1});
            int idx = static_cast<int>(nodes.size() - 1);
            seen[key] = idx;
            if (next.is_circle()) {
                goal = idx;
                break;
            }
            if (nodes.size() > state_budget) throw ValidationError("state budget exceeded");
            queue.push_back(idx);
        }
    }
    SearchResult res;
    res.states = nodes.size();
    if (goal < 0) return res;
    res.moves = nodes[goal].dist;
    res.exact = true;
    std::vector<int> chain;
    for (int i = goal; i >= 0; i = nodes[i].parent) chain.push_back(i);
    std::reverse(chain.begin(), chain.end());
    res.trace.initial = input;
    for (std::size_t k = 1; k < chain.size(); ++k) {
        const Node& node = nodes[chain[k]];
        const CurveMap& prev = nodes[chain[k - 1]].map;
        res.trace.steps.push_back({node.via, detail::maybe_defect(prev), detail::maybe_defect(node.map),
                                   static_cast<int>(node.map.vertex_count())});
    }
    res.trace.final_map = nodes[goal].map;
    res.trace.completed = true;
    return res;
}

struct BoundsReport {
    int n = 0;
    int defect = 0;
    int lower_bound = 0;   // ceil(|defect| / 2)
    int achieved_moves = 0;
    bool exact = false;
    bool completed = false;
};

inline BoundsReport bounds_report(const CurveMap& m, long long max_steps = -1) {
    if (!m.is_unicursal()) throw ValidationError("not unicursal");
    BoundsReport rep;
    rep.n = static_cast<int>(m.vertex_count());
    rep.defect = defect_polyak(m);
    rep.lower_bound = (std::abs(rep.defect) + 1) / 2;
    MoveTrace trace = reduce_curve(m, MoveFamily::homotopy, max_steps);
    rep.achieved_moves = static_cast<int>(trace.steps.size());
    rep.completed = trace.completed;
    if (rep.n <= 7 && rep.completed) {
        SearchResult s = min_moves_search(m, MoveFamily::homotopy);
        rep.exact = s.exact && s.moves == rep.achieved_moves;
    }
    return rep;
}

// Smooth inter-curve crossings until a single closed curve remains.
inline CurveMap unicursal_smoothing(const CurveMap& input) {
    CurveMap m = input;
    while (!m.is_circle() && m.curve_count() > 1) {
        std::vector<int> curve_of(m.dart_count(), -1);
        int curves = 0;
        for (Dart d = 0; d < m.dart_count(); ++d) {
            if (curve_of[d] >= 0) continue;
            int id = curves++;
            Dart e = d;
            do {
                curve_of[e] = id;
                curve_of[m.alpha(e)] = id;
                e = m.succ(e);
            } while (e != d);
        }
        bool smoothed = false;
        for (std::uint32_t v = 0; v < m.vertex_count() && !smoothed; ++v) {
            if (curve_of[make_dart(v, 0)] != curve_of[make_dart(v, 1)]) {
                SmoothResult r = smooth(m, v, 0);
                if (!r.connected()) throw ValidationError("smoothing disconnected the map");
                m = r.components[0];
                smoothed = true;
            }
        }
        if (!smoothed) throw ValidationError("no inter-curve crossing found");
    }
    return m;
}

inline BoundsReport bounds_report(const PlaneGraph& g, long long max_steps = -1) {
    BoundsReport rep;
    rep.n = static_cast<int>(g.vertex_count());
    CurveMap med = g.is_trivial() ? CurveMap::circle() : medial(g).curve;
    if (!med.is_unicursal()) med = unicursal_smoothing(med);
    rep.defect = defect_polyak(med);
    rep.lower_bound = (std::abs(rep.defect) + 1) / 2;
    ElectricalTrace trace = reduce_graph(g, max_steps);
    rep.achieved_moves = static_cast<int>(trace.steps.size());
    rep.completed = trace.completed;
    if (med.vertex_count() <= 7 && rep.completed && medial(g).curve.is_unicursal()) {
        SearchResult s = min_moves_search(medial(g).curve, MoveFamily::medial_electrical);
        rep.exact = s.exact && s.moves == rep.achieved_moves;
    }
    return rep;
}

// Breadth-first closure of the circle under 0->1, 0->2 and 3->3 up to
// nmax crossings: every generic closed curve appears (deduplicated up to
// reflection).
inline std::vector<CurveMap> enumerate_curves_up_to(int nmax) {
    std::vector<CurveMap> out{CurveMap::circle()};
    std::set<std::string> seen{canonical_form(CurveMap::circle(), true)};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        CurveMap m = out[cur];
        std::vector<MoveKind> kinds{MoveKind::r3};
        if (static_cast<int>(m.vertex_count()) < nmax) {
            kinds.push_back(MoveKind::r1_up);
            kinds.push_back(MoveKind::r2_up);
        }
        for (const MoveSite& s : enumerate_moves(m, kinds)) {
            CurveMap next = apply_move(m, s);
            std::string key = canonical_form(next, true);
            if (!seen.insert(key).second) continue;
            out.push_back(next);
            queue.push_back(out.size() - 1);
        }
    }
    return out;
}

// All connected proper smoothings of a curve, one representative per
// canonical class.
inline std::vector<CurveMap> connected_proper_smoothings(const CurveMap& input) {
    std::vector<CurveMap> out;
    std::set<std::string> seen;
    struct Frame {
        CurveMap map;
        std::vector<std::uint32_t> orig;  // original vertex per current vertex
        std::uint32_t next;               // next original vertex to consider
    };
    std::vector<std::uint32_t> all(input.vertex_count());
    for (std::uint32_t v = 0; v < input.vertex_count(); ++v) all[v] = v;
    std::vector<Frame> stack{{input, all, 0}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        bool proper = f.map.vertex_count() < input.vertex_count();
        if (proper) {
            std::string key = canonical_form(f.map, true);
            if (seen.insert(key).second) out.push_back(f.map);
        }
        if (f.map.is_circle()) continue;
        for (std::uint32_t v = 0; v < f.map.vertex_count(); ++v) {
            if (f.orig[v] < f.next) continue;
            for (int choice = 0; choice < 2; ++choice) {
                SmoothResult r = smooth(f.map, v, choice);
                if (!r.connected()) continue;
                Frame g{r.components[0], {}, f.orig[v] + 1};
                if (!g.map.is_circle()) {
                    g.orig.resize(g.map.vertex_count());
                    std::size_t w = 0;
                    for (std::uint32_t u = 0; u < f.map.vertex_count(); ++u)
                        if (u != v) g.orig[w++] = f.orig[u];
                }
                stack.push_back(std::move(g));
            }
        }
    }
    return out;
}

}  // namespace curvekit
