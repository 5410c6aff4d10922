#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "curvekit/curve_map.hpp"
#include "curvekit/defect.hpp"
#include "curvekit/gauss.hpp"

namespace curvekit {

// A knot diagram over a curve shadow.  ascending[x] = 1 iff the first
// passage through x (from the basepoint) goes over the second.
struct KnotDiagram {
    CurveMap shadow;
    std::vector<char> ascending;
};

namespace detail {

// x is the crossing whose first passage comes earlier along the curve.
struct InterleavedPair {
    int x, y;
    int sign_product;
};

inline std::vector<InterleavedPair> interleaved_pairs(const SignedGaussCode& code) {
    std::vector<InterleavedPair> pairs;
    int n = code.crossings();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (interleaved(code, x, y)) {
                int first = code.positions[x][0] < code.positions[y][0] ? x : y;
                int second = first == x ? y : x;
                pairs.push_back({first, second, code.sign[x] * code.sign[y]});
            }
    return pairs;
}

// Polyak-Viro sum: an interleaved pair counts only when the crossing met
// first is descending and the later one ascending.
inline long long c2_over_pairs(const std::vector<InterleavedPair>& pairs,
                               const std::vector<char>& ascending) {
    long long sum = 0;
    for (const auto& p : pairs)
        if (!ascending[p.x] && ascending[p.y]) sum += p.sign_product;
    return -sum;
}

// Counter-based per-sample randomness (splitmix64 over seed and index).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace detail

inline int casson_c2(const KnotDiagram& diagram) {
    if (diagram.shadow.is_circle()) return 0;
    SignedGaussCode code = gauss_code(diagram.shadow);
    if (diagram.ascending.size() != static_cast<std::size_t>(code.crossings()))
        throw ValidationError("ascending bits do not match the crossing set");
    return static_cast<int>(detail::c2_over_pairs(detail::interleaved_pairs(code), diagram.ascending));
}

// Re-root the diagram: crossings whose two passages straddle the old and
// new basepoints swap passage order, so their ascending bit flips.
inline KnotDiagram with_basepoint(const KnotDiagram& diagram, Dart new_base) {
    if (diagram.shadow.is_circle()) return diagram;
    std::vector<Dart> t = diagram.shadow.traversal();
    std::size_t shift = 0;
    while (shift < t.size() && t[shift] != new_base) ++shift;
    if (shift == t.size()) throw ValidationError("basepoint must lie on the traversal");
    SignedGaussCode code = gauss_code(diagram.shadow);
    KnotDiagram out{diagram.shadow.with_basepoint(new_base), diagram.ascending};
    std::size_t len = t.size();
    for (int v = 0; v < code.crossings(); ++v) {
        std::size_t i1 = (code.positions[v][0] + len - shift) % len;
        std::size_t i2 = (code.positions[v][1] + len - shift) % len;
        if (i2 < i1) out.ascending[v] ^= 1;
    }
    return out;
}

// Exact rational with denominator 2^n, kept unreduced.
struct ExactExpectation {
    long long numerator = 0;
    int log2_denominator = 0;
};

inline ExactExpectation expected_c2_exhaustive(const CurveMap& shadow) {
    if (shadow.is_circle()) return {0, 0};
    int n = static_cast<int>(shadow.vertex_count());
    if (n > 20) throw ValidationError("exhaustive enumeration limited to 20 crossings");
    SignedGaussCode code = gauss_code(shadow);
    auto pairs = detail::interleaved_pairs(code);
    long long total = 0;
    std::vector<char> ascending(n, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        for (int v = 0; v < n; ++v) ascending[v] = (mask >> v) & 1u;
        total += detail::c2_over_pairs(pairs, ascending);
    }
    return {total, n};
}

struct MonteCarloEstimate {
    double mean = 0;
    double std_error = 0;
    long long samples = 0;
};

inline MonteCarloEstimate expected_c2_monte_carlo(const CurveMap& shadow, long long samples,
                                                  std::uint64_t seed) {
    if (samples < 1) throw ValidationError("need at least one sample");
    if (shadow.is_circle()) return {0.0, 0.0, samples};
    int n = static_cast<int>(shadow.vertex_count());
    SignedGaussCode code = gauss_code(shadow);
    auto pairs = detail::interleaved_pairs(code);
    long long sum = 0, sum_sq = 0;
    std::uint64_t base = detail::mix64(seed ^ 0x632be59bd9b4e019ull);
    std::vector<char> ascending(n, 0);
    for (long long i = 0; i < samples; ++i) {
        std::uint64_t word = 0;
        for (int v = 0; v < n; ++v) {
            if (v % 64 == 0)
                word = detail::mix64(base + static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ull +
                                     static_cast<std::uint64_t>(v / 64));
            ascending[v] = (word >> (v % 64)) & 1u;
        }
        long long c2 = detail::c2_over_pairs(pairs, ascending);
        sum += c2;
        sum_sq += c2 * c2;
    }
    MonteCarloEstimate est;
    est.samples = samples;
    est.mean = static_cast<double>(sum) / static_cast<double>(samples);
    double variance =
        (static_cast<double>(sum_sq) - static_cast<double>(sum) * est.mean) /
        (samples > 1 ? static_cast<double>(samples - 1) : 1.0);
    est.std_error = std::sqrt(std::max(0.0, variance) / static_cast<double>(samples));
    return est;
}

}  // namespace curvekit
