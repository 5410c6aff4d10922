#include <catch2/catch_amalgamated.hpp>

#include "curvekit/generators.hpp"
#include "curvekit/reduction.hpp"
#include "fixtures.hpp"

using namespace curvekit;

namespace {

// Re-apply every recorded step and compare maps and defects.
void replay_and_check(const MoveTrace& trace) {
    CurveMap m = trace.initial;
    for (const MoveStep& step : trace.steps) {
        REQUIRE(step.defect_before == (m.is_unicursal() ? std::optional<int>(defect_polyak(m))
                                                        : std::nullopt));
        m = apply_move(m, step.site);
        REQUIRE(static_cast<int>(m.vertex_count()) == step.n_after);
        REQUIRE(step.defect_after == (m.is_unicursal() ? std::optional<int>(defect_polyak(m))
                                                       : std::nullopt));
        if (step.defect_before && step.defect_after) {
            int delta = *step.defect_after - *step.defect_before;
            REQUIRE((delta == -2 || delta == 0 || delta == 2));
        }
    }
    REQUIRE(canonical_form(m, false) == canonical_form(trace.final_map, false));
}

}  // namespace

TEST_CASE("greedy homotopy reduction of the basic curves") {
    MoveTrace t = reduce_curve(fixtures::trefoil(), MoveFamily::homotopy);
    REQUIRE(t.completed);
    REQUIRE(t.steps.size() == 2);  // 2->0 at a lobe, then 1->0
    REQUIRE(t.steps[0].defect_before == 2);
    REQUIRE(t.steps[0].defect_after == 0);
    replay_and_check(t);

    MoveTrace f8 = reduce_curve(fixtures::figure_eight(), MoveFamily::homotopy);
    REQUIRE(f8.completed);
    REQUIRE(f8.steps.size() == 1);
    REQUIRE(f8.steps[0].site.kind == MoveKind::r1_down);

    MoveTrace none = reduce_curve(CurveMap::circle(), MoveFamily::homotopy);
    REQUIRE(none.completed);
    REQUIRE(none.steps.empty());
}

TEST_CASE("greedy medial reduction of the trefoil takes three moves") {
    MoveTrace t = reduce_curve(fixtures::trefoil(), MoveFamily::medial_electrical);
    REQUIRE(t.completed);
    REQUIRE(t.steps.size() == 3);
    replay_and_check(t);
}

TEST_CASE("greedy homotopy reduction of a large flat torus knot") {
    CurveMap t45 = torus_knot(4, 5);
    MoveTrace trace = reduce_curve(t45, MoveFamily::homotopy);
    REQUIRE(trace.completed);
    REQUIRE(trace.steps.size() >= std::abs(defect_polyak(t45)) / 2);
    replay_and_check(trace);
}

TEST_CASE("exact oracles on the smallest curves") {
    REQUIRE(min_moves_search(CurveMap::circle(), MoveFamily::homotopy).moves == 0);
    REQUIRE(min_moves_search(CurveMap::circle(), MoveFamily::medial_electrical).moves == 0);

    SearchResult h = min_moves_search(fixtures::trefoil(), MoveFamily::homotopy);
    REQUIRE(h.exact);
    REQUIRE(h.moves == 2);
    replay_and_check(h.trace);

    SearchResult x = min_moves_search(fixtures::trefoil(), MoveFamily::medial_electrical);
    REQUIRE(x.exact);
    REQUIRE(x.moves == 3);
    replay_and_check(x.trace);
}

TEST_CASE("greedy electrical reduction") {
    ElectricalTrace c3 = reduce_graph(cylindrical_grid(1, 3));
    REQUIRE(c3.completed);
    REQUIRE(c3.steps.size() == 3);

    // single vertex with one self-loop reduces in one move
    PlaneGraphBuilder b;
    b.add_vertex();
    int e = b.add_edge(0, 0);
    b.set_rotation(0, {{e, 0}, {e, 1}});
    ElectricalTrace lp = reduce_graph(b.build(e, 0));
    REQUIRE(lp.completed);
    REQUIRE(lp.steps.size() == 1);

    ElectricalTrace grid = reduce_graph(rectangular_grid(3, 3));
    REQUIRE(grid.completed);
    BoundsReport rep = bounds_report(rectangular_grid(3, 3));
    REQUIRE(rep.achieved_moves >= rep.lower_bound);
}

TEST_CASE("electrical trace replays with matching medial defects") {
    ElectricalTrace trace = reduce_graph(cylindrical_grid(2, 3));
    REQUIRE(trace.completed);
    PlaneGraph g = trace.initial;
    for (const ElectricalStep& step : trace.steps) {
        g = apply_electrical(g, step.site);
        REQUIRE(g.vertex_count() == step.vertices_after);
        REQUIRE(g.edge_count() == step.edges_after);
        CurveMap med = g.is_trivial() ? CurveMap::circle() : medial(g).curve;
        std::optional<int> d =
            med.is_unicursal() ? std::optional<int>(defect_polyak(med)) : std::nullopt;
        REQUIRE(step.medial_defect_after == d);
    }
    REQUIRE(g.is_trivial());
}

TEST_CASE("bounds reports") {
    BoundsReport c3 = bounds_report(cylindrical_grid(1, 3));
    REQUIRE(c3.defect == 2);
    REQUIRE(c3.lower_bound == 1);
    REQUIRE(c3.achieved_moves == 3);
    REQUIRE(c3.exact);

    BoundsReport pt = bounds_report(PlaneGraph::trivial());
    REQUIRE(pt.lower_bound == 0);
    REQUIRE(pt.achieved_moves == 0);
    REQUIRE(pt.completed);

    BoundsReport tre = bounds_report(fixtures::trefoil());
    REQUIRE(tre.lower_bound == 1);
    REQUIRE(tre.achieved_moves == 2);
    REQUIRE(tre.exact);
}

TEST_CASE("unicursal smoothings") {
    CurveMap venn = torus_knot(2, 4);  // two curves crossing four times
    REQUIRE(venn.curve_count() == 2);
    CurveMap smoothed = unicursal_smoothing(venn);
    REQUIRE(smoothed.is_unicursal());
    REQUIRE(smoothed.vertex_count() == 3);

    REQUIRE(unicursal_smoothing(fixtures::trefoil()).vertex_count() == 3);  // already unicursal

    // Corollary 3.4 shape: X(map) >= H(unicursal smoothing)
    SearchResult x = min_moves_search(venn, MoveFamily::medial_electrical);
    SearchResult h = min_moves_search(smoothed, MoveFamily::homotopy);
    REQUIRE(x.exact);
    REQUIRE(h.exact);
    REQUIRE(x.moves >= h.moves);
}

TEST_CASE("inequality chain and strict smoothing decrease on tiny curves") {
    for (const CurveMap& c : enumerate_curves_up_to(3)) {
        SearchResult x = min_moves_search(c, MoveFamily::medial_electrical);
        SearchResult h =
            min_moves_search(c, MoveFamily::homotopy, static_cast<int>(c.vertex_count()) + 2);
        REQUIRE(x.exact);
        REQUIRE(h.exact);
        int lower = std::abs(defect_polyak(c)) / 2;
        REQUIRE(x.moves >= h.moves);
        REQUIRE(h.moves >= lower);
        for (const CurveMap& s : connected_proper_smoothings(c)) {
            SearchResult xs = min_moves_search(s, MoveFamily::medial_electrical);
            REQUIRE(xs.moves < x.moves);
        }
    }
}
