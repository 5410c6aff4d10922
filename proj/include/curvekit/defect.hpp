#pragma once

#include <cstdlib>
#include <vector>

#include "curvekit/alexander.hpp"
#include "curvekit/curve_map.hpp"
#include "curvekit/gauss.hpp"

namespace curvekit {

// Defect via the interleaving formula:
//   delta = -2 * sum over unordered interleaved pairs of sgn(x)*sgn(y).
// The factor -2 is kept verbatim so published values match tool output.
inline int defect_polyak(const SignedGaussCode& code) {
    int n = code.crossings();
    long long sum = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (interleaved(code, x, y)) sum += code.sign[x] * code.sign[y];
    return static_cast<int>(-2 * sum);
}

inline int defect_polyak(const CurveMap& m) {
    if (m.is_circle()) return 0;
    return defect_polyak(gauss_code(m));
}

// Independent route: delta = n - 2 * sum over x of sgn(x)*wind(gamma_x, x),
// valid when the basepoint lies on the outer face (normalized here).
inline int defect_winding(const CurveMap& m) {
    if (m.is_circle()) return 0;
    CurveMap c = m.normalized_outer_basepoint();
    SignedGaussCode code = gauss_code(c);
    long long sum = 0;
    for (int x = 0; x < code.crossings(); ++x)
        sum += static_cast<long long>(code.sign[x]) * subloop_winding_num2(c, x);
    return static_cast<int>(static_cast<long long>(m.vertex_count()) - sum);
}

struct DefectReport {
    int n = 0;
    int polyak = 0;
    int winding = 0;
    int interleaved_pairs = 0;
    long long lemma52_bound = 0;           // 2n*diam(dual) + n
    std::vector<int> residuals;            // per vertex, all zero when consistent
};

inline DefectReport defect_report(const CurveMap& m) {
    DefectReport rep;
    if (m.is_circle()) return rep;
    CurveMap c = m.normalized_outer_basepoint();
    SignedGaussCode code = gauss_code(c);
    rep.n = static_cast<int>(c.vertex_count());
    long long pairs = 0, polyak = 0;
    for (int x = 0; x < rep.n; ++x)
        for (int y = x + 1; y < rep.n; ++y)
            if (interleaved(code, x, y)) {
                ++pairs;
                polyak += code.sign[x] * code.sign[y];
            }
    rep.interleaved_pairs = static_cast<int>(pairs);
    rep.polyak = static_cast<int>(-2 * polyak);
    rep.residuals.assign(rep.n, 0);
    long long wind_sum = 0;
    for (int x = 0; x < rep.n; ++x) {
        int wind2 = subloop_winding_num2(c, x);
        wind_sum += static_cast<long long>(code.sign[x]) * wind2;
        int interleaved_sign_sum = 0;
        for (int y = 0; y < rep.n; ++y)
            if (y != x && interleaved(code, x, y)) interleaved_sign_sum += code.sign[y];
        rep.residuals[x] = interleaved_sign_sum - (wind2 - code.sign[x]);
    }
    rep.winding = static_cast<int>(rep.n - wind_sum);
    rep.lemma52_bound = 2LL * rep.n * dual_diameter(c) + rep.n;
    return rep;
}

}  // namespace curvekit
