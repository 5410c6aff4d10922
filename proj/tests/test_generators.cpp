#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "curvekit/canonical.hpp"
#include "curvekit/defect.hpp"
#include "curvekit/electrical.hpp"
#include "curvekit/generators.hpp"
#include "fixtures.hpp"

using namespace curvekit;

namespace {
long long choose3(long long m) { return m * (m - 1) * (m - 2) / 6; }
}

TEST_CASE("torus knot basics") {
    REQUIRE(torus_knot(1, 7).is_circle());
    CurveMap t23 = torus_knot(2, 3);
    REQUIRE(t23.vertex_count() == 3);
    REQUIRE(canonical_form(t23, false) == canonical_form(fixtures::trefoil(), false));
    for (int p = 2; p <= 5; ++p)
        for (int q = 1; q <= 5; ++q) {
            CurveMap t = torus_knot(p, q);
            REQUIRE(t.vertex_count() == static_cast<std::size_t>((p - 1) * q));
            REQUIRE(t.is_unicursal() == (std::gcd(p, q) == 1));
            REQUIRE(t.curve_count() == std::gcd(p, q));
        }
}

TEST_CASE("torus knot defect formulas at small sizes") {
    REQUIRE(defect_polyak(torus_knot(3, 4)) == 8);   // 2*C(4,3)
    REQUIRE(defect_polyak(torus_knot(4, 3)) == -2);  // -2*C(3,3)
    REQUIRE(defect_polyak(torus_knot(5, 4)) == -8);  // -2*C(4,3)
    for (int p = 2; p <= 5; ++p)
        for (int a = 1; a <= 2; ++a) {
            REQUIRE(defect_polyak(torus_knot(p, a * p + 1)) == 2 * a * choose3(p + 1));
            REQUIRE(defect_polyak(torus_knot(a * p + 1, p)) == -2 * a * choose3(p));
        }
    REQUIRE(defect_polyak(torus_knot(3, 7)) == 4 * choose3(4));  // T(p,2p+1)
}

TEST_CASE("torus knots agree with both defect routes and pass diagnostics") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {4, 3}, {5, 4}, {4, 5}}) {
        CurveMap t = torus_knot(p, q);
        DefectReport rep = defect_report(t);
        REQUIRE(rep.polyak == rep.winding);
        for (int r : rep.residuals) REQUIRE(r == 0);
        REQUIRE(std::abs(rep.polyak) <= rep.lemma52_bound);
    }
}

TEST_CASE("grid constructors") {
    PlaneGraph c3 = cylindrical_grid(1, 3);
    REQUIRE(c3.vertex_count() == 3);
    REQUIRE(c3.edge_count() == 3);
    REQUIRE(c3.face_count() == 2);

    PlaneGraph c4 = rectangular_grid(2, 2);
    REQUIRE(c4.vertex_count() == 4);
    REQUIRE(c4.edge_count() == 4);
    for (std::uint32_t v = 0; v < 4; ++v) REQUIRE(c4.degree(v) == 2);

    PlaneGraph g35 = rectangular_grid(3, 5);
    REQUIRE(g35.vertex_count() == 15);
    REQUIRE(g35.edge_count() == 3 * 4 + 2 * 5);
    REQUIRE(dual(g35).vertex_count() == 2 * 4 + 1);

    REQUIRE_THROWS_AS(cylindrical_grid(1, 2), ValidationError);
}

TEST_CASE("medial of cylindrical grids are flat torus knots") {
    for (auto [k, q] : std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {2, 3}, {2, 5}}) {
        MedialResult med = medial(cylindrical_grid(k, q));
        REQUIRE(canonical_form(med.curve, false) == canonical_form(torus_knot(2 * k, q), false));
    }
}

TEST_CASE("random curves are deterministic, planar and unicursal") {
    for (int n : {0, 1, 5, 12}) {
        CurveMap a = random_curve(n, 42);
        CurveMap b = random_curve(n, 42);
        REQUIRE(a.vertex_count() == static_cast<std::size_t>(n));
        REQUIRE(a.is_unicursal());
        REQUIRE(a.face_count() == (n == 0 ? 2 : n + 2));
        REQUIRE(canonical_form(a, false) == canonical_form(b, false));
    }
    REQUIRE(canonical_form(random_curve(9, 1), false) != canonical_form(random_curve(9, 2), false));
}

TEST_CASE("some curve is chiral, and the mirror flag identifies it") {
    bool found = false;
    for (std::uint64_t seed = 0; seed < 12 && !found; ++seed) {
        CurveMap c = random_curve(7, seed);
        if (canonical_form(c, false) != canonical_form(c.mirrored(), false)) {
            found = true;
            REQUIRE(canonical_form(c, true) == canonical_form(c.mirrored(), true));
        }
    }
    REQUIRE(found);
}

TEST_CASE("connected sums add defects and never interleave across summands") {
    CurveMap s = connected_sum(torus_knot(3, 4), torus_knot(4, 3));
    REQUIRE(s.vertex_count() == 17);
    REQUIRE(s.is_unicursal());
    REQUIRE(defect_polyak(s) == 8 - 2);
    SignedGaussCode code = gauss_code(s);
    // crossings of the second summand occupy a contiguous block
    for (int x = 0; x < 8; ++x)
        for (int y = 8; y < 17; ++y) REQUIRE_FALSE(interleaved(code, x, y));

    REQUIRE(defect_polyak(connected_sum(torus_knot(2, 3), torus_knot(4, 3))) == 0);
    CurveMap t = fixtures::trefoil();
    REQUIRE(canonical_form(connected_sum(t, CurveMap::circle()), false) ==
            canonical_form(t, false));
    REQUIRE(canonical_form(connected_sum(CurveMap::circle(), t), false) ==
            canonical_form(t, false));
}

TEST_CASE("defect agreement on a batch of random curves") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        CurveMap c = random_curve(14, 100 + seed);
        DefectReport rep = defect_report(c);
        REQUIRE(rep.polyak % 2 == 0);
        REQUIRE(rep.polyak == rep.winding);
        for (int r : rep.residuals) REQUIRE(r == 0);
        REQUIRE(std::abs(rep.polyak) <= rep.lemma52_bound);
        REQUIRE(defect_polyak(c.reversed()) == rep.polyak);
        REQUIRE(defect_polyak(c.mirrored()) == rep.polyak);
    }
}
