#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "curvekit/alexander.hpp"
#include "curvekit/curve_map.hpp"

namespace curvekit {

// Straight-line drawing from the rotation system: subdivide every edge
// twice (loops and parallels become simple), pin the outer boundary to a
// circle and relax everything else to the barycenter of its neighbors.
// Cosmetic only; correctness lives in the map.
inline std::string render_svg(const CurveMap& m, bool face_labels = false) {
    std::ostringstream svg;
    const double size = 720, margin = 40;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    if (m.is_circle()) {
        svg << "  <circle cx=\"" << size / 2 << "\" cy=\"" << size / 2 << "\" r=\""
            << size / 2 - margin << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        if (face_labels) {
            svg << "  <text x=\"" << size / 2 << "\" y=\"" << size / 2 << "\">1</text>\n";
            svg << "  <text x=\"" << margin / 2 << "\" y=\"" << margin / 2 << "\">0</text>\n";
        }
        svg << "</svg>\n";
        return svg.str();
    }

    std::size_t n = m.vertex_count();
    std::size_t nodes = n + 2 * m.edge_count();
    std::vector<int> edge_of(m.dart_count(), -1);
    int edges = 0;
    for (Dart d = 0; d < m.dart_count(); ++d)
        if (edge_of[d] < 0) {
            edge_of[d] = edge_of[m.alpha(d)] = edges++;
        }
    auto sub_node = [&](Dart d) {
        // node near the d end: edges store their low-dart end first
        int e = edge_of[d];
        bool low_end = d < m.alpha(d);
        return n + 2 * static_cast<std::size_t>(e) + (low_end ? 0 : 1);
    };

    std::vector<std::vector<std::size_t>> adj(nodes);
    for (Dart d = 0; d < m.dart_count(); ++d) {
        std::size_t v = dart_vertex(d), s = sub_node(d);
        adj[v].push_back(s);
        adj[s].push_back(v);
        if (d < m.alpha(d)) {
            adj[s].push_back(sub_node(m.alpha(d)));
            adj[sub_node(m.alpha(d))].push_back(s);
        }
    }

    std::vector<double> x(nodes, size / 2), y(nodes, size / 2);
    std::vector<char> fixed(nodes, 0);
    const auto& outer = m.face_darts(m.outer_face());
    std::vector<std::size_t> boundary;
    for (Dart d : outer) {
        boundary.push_back(sub_node(d));
        boundary.push_back(sub_node(m.alpha(d)));
    }
    double radius = size / 2 - margin;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        if (fixed[boundary[i]]) continue;
        double angle = 2 * 3.14159265358979 * static_cast<double>(i) / boundary.size();
        x[boundary[i]] = size / 2 + radius * std::cos(angle);
        y[boundary[i]] = size / 2 + radius * std::sin(angle);
        fixed[boundary[i]] = 1;
    }
    for (int iter = 0; iter < 400; ++iter) {
        for (std::size_t v = 0; v < nodes; ++v) {
            if (fixed[v] || adj[v].empty()) continue;
            double sx = 0, sy = 0;
            for (std::size_t w : adj[v]) {
                sx += x[w];
                sy += y[w];
            }
            x[v] = sx / adj[v].size();
            y[v] = sy / adj[v].size();
        }
    }

    svg << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
    for (Dart d = 0; d < m.dart_count(); ++d) {
        if (d >= m.alpha(d)) continue;
        std::size_t a = dart_vertex(d), b = dart_vertex(m.alpha(d));
        std::size_t s1 = sub_node(d), s2 = sub_node(m.alpha(d));
        svg << "    <path d=\"M " << x[a] << ' ' << y[a] << " L " << x[s1] << ' ' << y[s1] << " L "
            << x[s2] << ' ' << y[s2] << " L " << x[b] << ' ' << y[b] << "\"/>\n";
    }
    svg << "  </g>\n";
    for (std::size_t v = 0; v < n; ++v)
        svg << "  <circle class=\"crossing\" cx=\"" << x[v] << "\" cy=\"" << y[v]
            << "\" r=\"3\" fill=\"black\"/>\n";
    if (face_labels) {
        AlexanderNumbering ax = alexander_numbering(m);
        for (int f = 0; f < m.face_count(); ++f) {
            double cx = 0, cy = 0;
            int count = 0;
            for (Dart d : m.face_darts(f)) {
                cx += x[sub_node(d)];
                cy += y[sub_node(d)];
                ++count;
            }
            if (f == m.outer_face()) {
                cx = margin / 2;
                cy = margin / 2;
            } else {
                cx /= count;
                cy /= count;
            }
            svg << "  <text x=\"" << cx << "\" y=\"" << cy << "\" font-size=\"16\">"
                << ax.face_values[f] << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace curvekit
