#pragma once

#include <string>

#include "curvekit/cmap_io.hpp"
#include "curvekit/curve_map.hpp"

// Hand-checked fixtures.  The trefoil table was derived on paper from the
// doubled 3-cycle: faces are the two triangles {0.0,1.0,2.0} and
// {0.2,1.2,2.2} plus three bigons; the traversal from 0.1 reads
// v1 v2 v0 v1 v2 v0.
namespace fixtures {

inline const char* kTrefoilCmap =
    "cmap 1\n"
    "vertices 3\n"
    "v 0 1.3 1.2 2.1 2.0\n"
    "v 1 2.3 2.2 0.1 0.0\n"
    "v 2 0.3 0.2 1.1 1.0\n"
    "base 0.1\n"
    "outer 0.2\n";

inline curvekit::CurveMap trefoil() { return curvekit::load_curve_cmap(kTrefoilCmap); }

// One crossing, loop on slots 0/1 and 2/3; outer face is the bigon.
inline curvekit::CurveMap figure_eight() {
    using namespace curvekit;
    std::vector<Dart> alpha(4);
    alpha[make_dart(0, 0)] = make_dart(0, 1);
    alpha[make_dart(0, 1)] = make_dart(0, 0);
    alpha[make_dart(0, 2)] = make_dart(0, 3);
    alpha[make_dart(0, 3)] = make_dart(0, 2);
    return CurveMap(1, alpha, make_dart(0, 0), make_dart(0, 0));
}

// The other chirality.
inline curvekit::CurveMap figure_eight_mirror() {
    using namespace curvekit;
    std::vector<Dart> alpha(4);
    alpha[make_dart(0, 1)] = make_dart(0, 2);
    alpha[make_dart(0, 2)] = make_dart(0, 1);
    alpha[make_dart(0, 3)] = make_dart(0, 0);
    alpha[make_dart(0, 0)] = make_dart(0, 3);
    return CurveMap(1, alpha, make_dart(0, 1), make_dart(0, 1));
}

}  // namespace fixtures
