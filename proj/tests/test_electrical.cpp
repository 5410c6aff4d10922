#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "curvekit/canonical.hpp"
#include "curvekit/electrical.hpp"
#include "curvekit/generators.hpp"
#include "fixtures.hpp"

using namespace curvekit;

namespace {

// K4 drawn as a triangle around a hub.
PlaneGraph k4() {
    PlaneGraphBuilder b;
    for (int i = 0; i < 4; ++i) b.add_vertex();
    int t01 = b.add_edge(0, 1), t12 = b.add_edge(1, 2), t20 = b.add_edge(2, 0);
    int s0 = b.add_edge(0, 3), s1 = b.add_edge(1, 3), s2 = b.add_edge(2, 3);
    b.set_rotation(0, {{t01, 0}, {s0, 0}, {t20, 1}});
    b.set_rotation(1, {{t12, 0}, {s1, 0}, {t01, 1}});
    b.set_rotation(2, {{t20, 0}, {s2, 0}, {t12, 1}});
    b.set_rotation(3, {{s0, 1}, {s1, 1}, {s2, 1}});
    return b.build(t01, 0);
}

ElectricalSite find_site(const PlaneGraph& g, ElectricalKind kind) {
    for (const auto& s : enumerate_electrical(g))
        if (s.kind == kind) return s;
    throw std::runtime_error("site not found");
}

int count_sites(const PlaneGraph& g, ElectricalKind kind) {
    int n = 0;
    for (const auto& s : enumerate_electrical(g))
        if (s.kind == kind) ++n;
    return n;
}

// the matching site on the dual graph (kinds swap within their dual pair)
ElectricalSite dual_site(const PlaneGraph& g, const PlaneGraph& gd, const ElectricalSite& s) {
    auto swap_kind = [](ElectricalKind k) {
        switch (k) {
            case ElectricalKind::leaf: return ElectricalKind::loop;
            case ElectricalKind::loop: return ElectricalKind::leaf;
            case ElectricalKind::series: return ElectricalKind::parallel;
            case ElectricalKind::parallel: return ElectricalKind::series;
            case ElectricalKind::y_to_delta: return ElectricalKind::delta_to_y;
            case ElectricalKind::delta_to_y: return ElectricalKind::y_to_delta;
        }
        return ElectricalKind::leaf;
    };
    ElectricalSite out;
    out.kind = swap_kind(s.kind);
    bool was_vertex = s.kind == ElectricalKind::leaf || s.kind == ElectricalKind::series ||
                      s.kind == ElectricalKind::y_to_delta;
    if (was_vertex) {
        // g-vertex becomes a dual face; with reversed orbits the dual
        // face containing dart d corresponds to the vertex of alpha(d)
        out.face_rep = gd.face_rep(gd.face_of(g.alpha(g.dart_at(s.vertex, 0))));
    } else {
        out.vertex = static_cast<std::uint32_t>(g.face_of(s.face_rep));
    }
    return out;
}

}  // namespace

TEST_CASE("C3 site census and the three-move reduction") {
    PlaneGraph c3 = cylindrical_grid(1, 3);
    REQUIRE(count_sites(c3, ElectricalKind::series) == 3);
    REQUIRE(count_sites(c3, ElectricalKind::delta_to_y) == 2);  // both faces are triangles
    REQUIRE(count_sites(c3, ElectricalKind::leaf) == 0);
    REQUIRE(count_sites(c3, ElectricalKind::parallel) == 0);

    PlaneGraph c2 = apply_electrical(c3, find_site(c3, ElectricalKind::series));
    REQUIRE(c2.vertex_count() == 2);
    REQUIRE(c2.edge_count() == 2);
    REQUIRE(count_sites(c2, ElectricalKind::parallel) == 2);

    PlaneGraph k2 = apply_electrical(c2, find_site(c2, ElectricalKind::parallel));
    REQUIRE(k2.vertex_count() == 2);
    REQUIRE(k2.edge_count() == 1);

    PlaneGraph pt = apply_electrical(k2, find_site(k2, ElectricalKind::leaf));
    REQUIRE(pt.is_trivial());
}

TEST_CASE("loop reduction on a single self-loop") {
    PlaneGraphBuilder b;
    b.add_vertex();
    int e = b.add_edge(0, 0);
    b.set_rotation(0, {{e, 0}, {e, 1}});
    PlaneGraph g = b.build(e, 0);
    REQUIRE(g.face_count() == 2);
    auto site = find_site(g, ElectricalKind::loop);
    REQUIRE(apply_electrical(g, site).is_trivial());
}

TEST_CASE("delta-wye on K4") {
    PlaneGraph g = k4();
    REQUIRE(g.face_count() == 4);
    REQUIRE(count_sites(g, ElectricalKind::delta_to_y) == 4);
    REQUIRE(count_sites(g, ElectricalKind::y_to_delta) == 4);

    // star the outer triangle
    ElectricalSite outer_tri{ElectricalKind::delta_to_y, 0, g.face_rep(g.outer_face())};
    PlaneGraph starred = apply_electrical(g, outer_tri);
    REQUIRE(starred.vertex_count() == 5);
    REQUIRE(starred.edge_count() == 6);

    // unstar the hub: back to a triangle with doubled sides
    PlaneGraph doubled = apply_electrical(g, find_site(g, ElectricalKind::y_to_delta));
    REQUIRE(doubled.vertex_count() == 3);
    REQUIRE(doubled.edge_count() == 6);
    REQUIRE(count_sites(doubled, ElectricalKind::parallel) == 3);
}

TEST_CASE("duality swaps the move kinds") {
    for (const PlaneGraph& g : {cylindrical_grid(1, 3), k4(), rectangular_grid(2, 3)}) {
        PlaneGraph gd = dual(g);
        REQUIRE(canonical_form(dual(gd), false) == canonical_form(g, false));
        for (const auto& s : enumerate_electrical(g)) {
            ElectricalSite sd = dual_site(g, gd, s);
            PlaneGraph a = dual(apply_electrical(g, s));
            PlaneGraph b = apply_electrical(gd, sd);
            REQUIRE(canonical_form(a, false) == canonical_form(b, false));
        }
    }
}

TEST_CASE("medial commutes with every electrical kind") {
    std::set<ElectricalKind> seen;
    std::vector<PlaneGraph> graphs{cylindrical_grid(1, 3), cylindrical_grid(2, 3), k4(),
                                   rectangular_grid(2, 3), rectangular_grid(1, 4)};
    // derive a few graphs carrying loops and leaves
    graphs.push_back(apply_electrical(graphs[0], find_site(graphs[0], ElectricalKind::series)));
    {
        PlaneGraph c2 = graphs.back();
        graphs.push_back(apply_electrical(c2, find_site(c2, ElectricalKind::parallel)));
        PlaneGraph doubled = apply_electrical(k4(), find_site(k4(), ElectricalKind::y_to_delta));
        PlaneGraph with_loop = contract_edge(doubled, 0);  // parallel pair collapses to a loop
        graphs.push_back(with_loop);
    }
    for (const PlaneGraph& g : graphs) {
        MedialResult med = medial(g);
        for (const auto& s : enumerate_electrical(g)) {
            seen.insert(s.kind);
            PlaneGraph ga = apply_electrical(g, s);
            CurveMap via_graph = medial(ga).curve;
            CurveMap via_moves = apply_move(med.curve, medial_site(g, med, s));
            REQUIRE(canonical_form(via_graph, false) == canonical_form(via_moves, false));
        }
    }
    REQUIRE(seen.size() == 6);
}

TEST_CASE("medial of an isolated vertex is the circle") {
    REQUIRE(medial(PlaneGraph::trivial()).curve.is_circle());
}

TEST_CASE("smoothings of the medial are medials of minors") {
    for (const PlaneGraph& g : {cylindrical_grid(1, 3), rectangular_grid(2, 3), k4()}) {
        MedialResult med = medial(g);
        for (int e = 0; e < static_cast<int>(g.edge_count()); ++e) {
            auto [d0, d1] = g.edge_darts(e);
            bool is_loop = g.vertex_of(d0) == g.vertex_of(d1);
            std::set<std::string> smoothings;
            for (int choice = 0; choice < 2; ++choice) {
                SmoothResult r = smooth(med.curve, e, choice);
                if (r.connected()) smoothings.insert(canonical_form(r.components[0], false));
            }
            if (!is_loop) {
                CurveMap contracted = medial(contract_edge(g, e)).curve;
                REQUIRE(smoothings.count(canonical_form(contracted, false)) == 1);
            }
            try {
                CurveMap deleted = medial(delete_edge(g, e)).curve;
                REQUIRE(smoothings.count(canonical_form(deleted, false)) == 1);
            } catch (const ValidationError&) {
                // bridge deletion disconnects; not a minor case we track
            }
        }
    }
}
