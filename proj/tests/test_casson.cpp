#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "curvekit/casson.hpp"
#include "curvekit/generators.hpp"
#include "fixtures.hpp"

using namespace curvekit;

TEST_CASE("c2 vanishes without interleaved pairs") {
    REQUIRE(casson_c2({CurveMap::circle(), {}}) == 0);
    CurveMap m8 = fixtures::figure_eight();
    REQUIRE(casson_c2({m8, {0}}) == 0);
    REQUIRE(casson_c2({m8, {1}}) == 0);
}

TEST_CASE("all-ascending diagrams have empty descending sum") {
    CurveMap t = fixtures::trefoil();
    REQUIRE(casson_c2({t, {1, 1, 1}}) == 0);
    REQUIRE(casson_c2({t, {0, 0, 0}}) == 0);
}

TEST_CASE("exhaustive expectation is defect over eight, exactly") {
    // trefoil: sum over the 8 resolutions is 2, so E = 1/4
    ExactExpectation tre = expected_c2_exhaustive(fixtures::trefoil());
    REQUIRE(tre.numerator == 2);
    REQUIRE(tre.log2_denominator == 3);

    for (const CurveMap& shadow :
         {torus_knot(4, 3), torus_knot(3, 4), torus_knot(2, 5), random_curve(9, 5),
          connected_sum(torus_knot(3, 4), torus_knot(4, 3)),
          connected_sum(torus_knot(2, 3), torus_knot(4, 3))}) {
        ExactExpectation e = expected_c2_exhaustive(shadow);
        long long n = shadow.vertex_count();
        // E[c2] * 8 = defect  <=>  numerator * 8 = defect * 2^n
        REQUIRE(e.numerator * 8 == static_cast<long long>(defect_polyak(shadow)) * (1LL << n));
    }

    // the spec's named values
    ExactExpectation a = expected_c2_exhaustive(torus_knot(4, 3));
    REQUIRE(a.numerator * 4 == -(1LL << a.log2_denominator));  // -1/4
    ExactExpectation b = expected_c2_exhaustive(torus_knot(3, 4));
    REQUIRE(b.numerator == (1LL << b.log2_denominator));  // exactly 1
    ExactExpectation c = expected_c2_exhaustive(connected_sum(torus_knot(3, 4), torus_knot(4, 3)));
    REQUIRE(c.numerator * 4 == 3 * (1LL << c.log2_denominator));  // 3/4
    ExactExpectation d = expected_c2_exhaustive(connected_sum(torus_knot(2, 3), torus_knot(4, 3)));
    REQUIRE(d.numerator == 0);
}

TEST_CASE("c2 survives basepoint relocation") {
    for (std::uint64_t seed : {3u, 8u}) {
        CurveMap shadow = random_curve(8, seed);
        KnotDiagram diagram{shadow, {1, 0, 1, 1, 0, 0, 1, 0}};
        int reference = casson_c2(diagram);
        for (Dart d : shadow.traversal()) {
            KnotDiagram moved = with_basepoint(diagram, d);
            REQUIRE(casson_c2(moved) == reference);
        }
    }
}

TEST_CASE("global sign flip leaves c2 unchanged") {
    CurveMap shadow = random_curve(8, 11);
    SignedGaussCode code = gauss_code(shadow);
    std::vector<char> asc{1, 0, 0, 1, 1, 0, 1, 0};
    auto pairs = detail::interleaved_pairs(code);
    long long before = detail::c2_over_pairs(pairs, asc);
    for (int& s : code.sign) s = -s;
    auto flipped = detail::interleaved_pairs(code);
    REQUIRE(detail::c2_over_pairs(flipped, asc) == before);
}

TEST_CASE("monte carlo estimator") {
    // one sample reproduces a single resolution exactly
    MonteCarloEstimate one = expected_c2_monte_carlo(fixtures::trefoil(), 1, 7);
    REQUIRE(std::fabs(one.mean - std::round(one.mean)) < 1e-12);

    // determinism
    MonteCarloEstimate a = expected_c2_monte_carlo(torus_knot(5, 4), 2000, 13);
    MonteCarloEstimate b = expected_c2_monte_carlo(torus_knot(5, 4), 2000, 13);
    REQUIRE(a.mean == b.mean);
    REQUIRE(a.std_error == b.std_error);

    // trefoil mean near 1/4
    MonteCarloEstimate t = expected_c2_monte_carlo(fixtures::trefoil(), 100000, 2024);
    REQUIRE(std::fabs(t.mean - 0.25) <= 4 * t.std_error);

    // T(5,4) has defect -8, so the mean sits near -1
    MonteCarloEstimate big = expected_c2_monte_carlo(torus_knot(5, 4), 100000, 99);
    REQUIRE(std::fabs(big.mean - (-1.0)) <= 4 * big.std_error);
}
