#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "curvekit/curve_map.hpp"
#include "curvekit/moves.hpp"
#include "curvekit/plane_graph.hpp"

namespace curvekit {

// Flat torus knot T(p,q): closure of the braid (s1 s2 ... s_{p-1})^q on p
// strands, built combinatorially.  Crossing (t,k) sits in braid block t
// between lanes k and k+1; its slots are 0 lower-right, 1 upper-right,
// 2 upper-left, 3 lower-left.  Unicursal iff gcd(p,q) = 1; p = 1 gives
// the circle.
inline CurveMap torus_knot(int p, int q) {
    if (p < 1 || q < 1) throw ValidationError("torus knot needs p, q >= 1");
    if (p == 1) return CurveMap::circle();
    std::size_t n = static_cast<std::size_t>(p - 1) * q;
    std::vector<Dart> alpha(4 * n, kNoDart);
    auto crossing = [&](int t, int k) { return static_cast<std::uint32_t>(t * (p - 1) + (k - 1)); };
    auto link = [&](Dart a, Dart b) {
        alpha[a] = b;
        alpha[b] = a;
    };
    std::vector<Dart> pending(p + 1, kNoDart);  // rightmost open dart per lane
    std::vector<Dart> left_boundary(p + 1, kNoDart);
    for (int t = 0; t < q; ++t) {
        for (int k = 1; k < p; ++k) {
            std::uint32_t c = crossing(t, k);
            Dart ll = make_dart(c, 3), ul = make_dart(c, 2);
            if (pending[k] == kNoDart) left_boundary[k] = ll;
            else link(ll, pending[k]);
            if (pending[k + 1] == kNoDart) left_boundary[k + 1] = ul;
            else link(ul, pending[k + 1]);
            pending[k] = make_dart(c, 0);      // lower-right continues lane k
            pending[k + 1] = make_dart(c, 1);  // upper-right continues lane k+1
        }
    }
    for (int lane = 1; lane <= p; ++lane) link(pending[lane], left_boundary[lane]);
    // unbounded face lies above the top lane; travel along it
    Dart base = make_dart(crossing(0, p - 1), 1);
    Dart outer = make_dart(crossing(0, p - 1), 2);
    return CurveMap(n, std::move(alpha), base, outer);
}

// q-cycle times p-path, embedded as nested cycles with level 1 innermost.
// At each vertex the counterclockwise rotation is
// [outward, ccw-neighbor, inward, cw-neighbor] with absent ends dropped.
inline PlaneGraph cylindrical_grid(int p, int q) {
    if (p < 1 || q < 3) throw ValidationError("cylindrical grid needs p >= 1, q >= 3");
    PlaneGraphBuilder b;
    auto vid = [&](int level, int j) { return static_cast<std::uint32_t>((level - 1) * q + j); };
    for (int i = 0; i < p * q; ++i) b.add_vertex();
    std::vector<std::vector<int>> ring(p + 1, std::vector<int>(q));
    std::vector<std::vector<int>> rung(p, std::vector<int>(q));
    for (int level = 1; level <= p; ++level)
        for (int j = 0; j < q; ++j) ring[level][j] = b.add_edge(vid(level, j), vid(level, (j + 1) % q));
    for (int level = 1; level < p; ++level)
        for (int j = 0; j < q; ++j) rung[level][j] = b.add_edge(vid(level, j), vid(level + 1, j));
    for (int level = 1; level <= p; ++level)
        for (int j = 0; j < q; ++j) {
            std::vector<std::pair<int, int>> rot;
            if (level < p) rot.push_back({rung[level][j], 0});        // outward
            rot.push_back({ring[level][j], 0});                       // ccw neighbor
            if (level > 1) rot.push_back({rung[level - 1][j], 1});    // inward
            rot.push_back({ring[level][(j + q - 1) % q], 1});         // cw neighbor
            b.set_rotation(vid(level, j), rot);
        }
    // outer face borders the outermost ring
    return b.build(ring[p][0], 0);
}

// p x q rectangular lattice; rotation [east, north, west, south].
inline PlaneGraph rectangular_grid(int p, int q) {
    if (p < 1 || q < 1) throw ValidationError("rectangular grid needs p, q >= 1");
    if (p * q < 2) throw ValidationError("rectangular grid needs at least two vertices");
    PlaneGraphBuilder b;
    auto vid = [&](int r, int c) { return static_cast<std::uint32_t>(r * q + c); };
    for (int i = 0; i < p * q; ++i) b.add_vertex();
    std::vector<std::vector<int>> east(p, std::vector<int>(q, -1));
    std::vector<std::vector<int>> south(p, std::vector<int>(q, -1));
    for (int r = 0; r < p; ++r)
        for (int c = 0; c + 1 < q; ++c) east[r][c] = b.add_edge(vid(r, c), vid(r, c + 1));
    for (int r = 0; r + 1 < p; ++r)
        for (int c = 0; c < q; ++c) south[r][c] = b.add_edge(vid(r, c), vid(r + 1, c));
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < q; ++c) {
            std::vector<std::pair<int, int>> rot;
            if (c + 1 < q) rot.push_back({east[r][c], 0});
            if (r > 0) rot.push_back({south[r - 1][c], 1});   // north (rows grow southward)
            if (c > 0) rot.push_back({east[r][c - 1], 1});
            if (r + 1 < p) rot.push_back({south[r][c], 0});
            b.set_rotation(vid(r, c), rot);
        }
    int outer_edge = q > 1 ? east[0][0] : south[0][0];
    return b.build(outer_edge, q > 1 ? 1 : 0);
}

// Grow a random curve from the circle by uniformly random 0->1 and 0->2
// insertions, with 3->3 shuffles mixed in (about a third of the steps)
// to diversify the face structure.  Deterministic for a fixed seed.
inline CurveMap random_curve(int n, std::uint64_t seed) {
    if (n < 0) throw ValidationError("crossing count must be nonnegative");
    std::mt19937_64 rng(seed);
    CurveMap m = CurveMap::circle();
    while (static_cast<int>(m.vertex_count()) < n) {
        bool shuffle = !m.is_circle() && rng() % 3 == 0;
        std::vector<MoveSite> sites =
            shuffle ? enumerate_moves(m, {MoveKind::r3}) : std::vector<MoveSite>{};
        if (sites.empty()) {
            std::vector<MoveKind> grow{MoveKind::r1_up};
            if (n - static_cast<int>(m.vertex_count()) >= 2) grow.push_back(MoveKind::r2_up);
            sites = enumerate_moves(m, grow);
        }
        std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
        m = apply_move(m, sites[pick(rng)]);
    }
    return m;
}

// Cut an outer edge of each curve and cross-splice, placing the second
// curve inside the common outer face.  No pair of crossings from
// different summands interleaves, so defect adds.
inline CurveMap connected_sum(const CurveMap& c1, const CurveMap& c2) {
    if (!c1.is_unicursal() || !c2.is_unicursal()) throw ValidationError("not unicursal");
    if (c2.is_circle()) return c1;
    if (c1.is_circle()) return c2;
    CurveMap a = c1.normalized_outer_basepoint();
    CurveMap b = c2.normalized_outer_basepoint();
    std::size_t n1 = a.vertex_count(), n2 = b.vertex_count();
    Dart d1 = a.basepoint();
    Dart d2 = b.basepoint();
    std::vector<Dart> alpha(4 * (n1 + n2));
    auto shift = [&](Dart d) { return static_cast<Dart>(d + 4 * n1); };
    for (Dart d = 0; d < 4 * n1; ++d) alpha[d] = a.alpha(d);
    for (Dart d = 0; d < 4 * n2; ++d) alpha[shift(d)] = shift(b.alpha(d));
    Dart a1 = a.alpha(d1), b1 = b.alpha(d2);
    alpha[d1] = shift(b1);
    alpha[shift(b1)] = d1;
    alpha[shift(d2)] = a1;
    alpha[a1] = shift(d2);
    // the two outer faces merge; any old outer-orbit dart still borders it
    return CurveMap(n1 + n2, std::move(alpha), d1, a.outer_rep());
}

}  // namespace curvekit
