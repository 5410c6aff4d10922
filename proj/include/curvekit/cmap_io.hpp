#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "curvekit/curve_map.hpp"
#include "curvekit/plane_graph.hpp"

namespace curvekit {

namespace detail {

inline std::vector<std::string> tokenize_cmap_line(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

inline Dart parse_dart_token(const std::string& tok, std::size_t vertex_count) {
    auto dot = tok.find('.');
    if (dot == std::string::npos) throw ParseError("expected vertex.slot, got: " + tok);
    unsigned long v = 0, s = 0;
    try {
        v = std::stoul(tok.substr(0, dot));
        s = std::stoul(tok.substr(dot + 1));
    } catch (const std::exception&) {
        throw ParseError("bad dart token: " + tok);
    }
    if (v >= vertex_count || s >= 4) throw ParseError("dart token out of range: " + tok);
    return make_dart(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(s));
}

struct CmapLines {
    std::size_t vertex_count = 0;
    bool circle = false;
    std::vector<std::vector<std::string>> vertex_lines;
    std::string base_token, outer_token;
};

inline CmapLines scan_cmap(const std::string& text) {
    CmapLines out;
    std::istringstream in(text);
    std::string line;
    bool header = false, counted = false;
    while (std::getline(in, line)) {
        auto toks = tokenize_cmap_line(line);
        if (toks.empty()) continue;
        if (!header) {
            if (toks.size() != 2 || toks[0] != "cmap" || toks[1] != "1")
                throw ParseError("expected header `cmap 1`");
            header = true;
            continue;
        }
        if (!counted) {
            if (toks.size() != 2 || toks[0] != "vertices") throw ParseError("expected `vertices <n>`");
            try {
                out.vertex_count = std::stoul(toks[1]);
            } catch (const std::exception&) {
                throw ParseError("bad vertex count: " + toks[1]);
            }
            counted = true;
            continue;
        }
        if (toks[0] == "circle") {
            out.circle = true;
        } else if (toks[0] == "v") {
            toks.erase(toks.begin());
            out.vertex_lines.push_back(toks);
        } else if (toks[0] == "base") {
            if (toks.size() != 2) throw ParseError("expected `base <v.s>`");
            out.base_token = toks[1];
        } else if (toks[0] == "outer") {
            if (toks.size() != 2) throw ParseError("expected `outer <v.s>`");
            out.outer_token = toks[1];
        } else {
            throw ParseError("unexpected line: " + line);
        }
    }
    if (!header) throw ParseError("missing `cmap 1` header");
    if (!counted) throw ParseError("missing `vertices <n>` line");
    return out;
}

}  // namespace detail

inline CurveMap load_curve_cmap(const std::string& text) {
    detail::CmapLines lines = detail::scan_cmap(text);
    if (lines.vertex_count == 0) {
        if (!lines.circle) throw ParseError("zero vertices but no `circle` marker");
        return CurveMap::circle();
    }
    if (lines.vertex_lines.size() != lines.vertex_count)
        throw ParseError("vertex line count does not match `vertices`");
    std::vector<Dart> alpha(4 * lines.vertex_count, kNoDart);
    std::vector<char> seen(lines.vertex_count, 0);
    for (const auto& toks : lines.vertex_lines) {
        if (toks.size() != 5) throw ParseError("curve vertex line needs `<id>` plus 4 dart tokens");
        unsigned long v = 0;
        try {
            v = std::stoul(toks[0]);
        } catch (const std::exception&) {
            throw ParseError("bad vertex id: " + toks[0]);
        }
        if (v >= lines.vertex_count || seen[v]) throw ParseError("bad or repeated vertex id: " + toks[0]);
        seen[v] = 1;
        for (int s = 0; s < 4; ++s)
            alpha[make_dart(static_cast<std::uint32_t>(v), s)] =
                detail::parse_dart_token(toks[1 + s], lines.vertex_count);
    }
    if (lines.base_token.empty() || lines.outer_token.empty())
        throw ParseError("curve map needs `base` and `outer` lines");
    Dart base = detail::parse_dart_token(lines.base_token, lines.vertex_count);
    Dart outer = detail::parse_dart_token(lines.outer_token, lines.vertex_count);
    return CurveMap(lines.vertex_count, std::move(alpha), base, outer);
}

inline std::string write_curve_cmap(const CurveMap& m) {
    std::ostringstream out;
    out << "cmap 1\n";
    out << "vertices " << m.vertex_count() << "\n";
    if (m.is_circle()) {
        out << "circle\n";
        return out.str();
    }
    for (std::uint32_t v = 0; v < m.vertex_count(); ++v) {
        out << "v " << v;
        for (int s = 0; s < 4; ++s) out << " " << format_dart(m.alpha(make_dart(v, s)));
        out << "\n";
    }
    out << "base " << format_dart(m.basepoint()) << "\n";
    out << "outer " << format_dart(m.outer_rep()) << "\n";
    return out.str();
}

// Plane graphs use the same container with degree-tagged vertex lines:
// `v <id> <deg>` followed by deg alpha-image tokens in rotation order.
inline PlaneGraph load_graph_cmap(const std::string& text) {
    detail::CmapLines lines = detail::scan_cmap(text);
    if (lines.vertex_count == 0) throw ParseError("a plane graph needs at least one vertex");
    if (lines.vertex_lines.size() != lines.vertex_count)
        throw ParseError("vertex line count does not match `vertices`");
    std::size_t n = lines.vertex_count;
    std::vector<std::vector<std::string>> toks(n);
    std::vector<int> degree(n, -1);
    for (const auto& raw : lines.vertex_lines) {
        if (raw.size() < 2) throw ParseError("graph vertex line needs `<id> <degree>`");
        unsigned long v = 0, deg = 0;
        try {
            v = std::stoul(raw[0]);
            deg = std::stoul(raw[1]);
        } catch (const std::exception&) {
            throw ParseError("bad vertex id or degree");
        }
        if (v >= n || degree[v] >= 0) throw ParseError("bad or repeated vertex id: " + raw[0]);
        if (raw.size() != 2 + deg) throw ParseError("degree does not match dart token count");
        degree[v] = static_cast<int>(deg);
        toks[v].assign(raw.begin() + 2, raw.end());
    }
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + degree[v];
    std::size_t nd = offset[n];
    auto parse = [&](const std::string& tok) {
        auto dot = tok.find('.');
        if (dot == std::string::npos) throw ParseError("expected vertex.slot, got: " + tok);
        unsigned long v = 0, s = 0;
        try {
            v = std::stoul(tok.substr(0, dot));
            s = std::stoul(tok.substr(dot + 1));
        } catch (const std::exception&) {
            throw ParseError("bad dart token: " + tok);
        }
        if (v >= n || static_cast<int>(s) >= degree[v])
            throw ParseError("dart token out of range: " + tok);
        return static_cast<GDart>(offset[v] + s);
    };
    PlaneGraph::Raw raw;
    raw.rot.resize(n);
    raw.alpha.assign(nd, kNoGDart);
    raw.edge_of.assign(nd, -1);
    for (std::size_t v = 0; v < n; ++v)
        for (int s = 0; s < degree[v]; ++s) {
            GDart d = static_cast<GDart>(offset[v] + s);
            raw.rot[v].push_back(d);
            raw.alpha[d] = parse(toks[v][s]);
        }
    int edges = 0;
    for (GDart d = 0; d < nd; ++d) {
        if (raw.edge_of[d] >= 0) continue;
        if (raw.alpha[d] >= nd || raw.alpha[raw.alpha[d]] != d)
            throw ValidationError("alpha not an involution");
        raw.edge_of[d] = raw.edge_of[raw.alpha[d]] = edges++;
    }
    raw.edge_labels.resize(edges);
    for (int e = 0; e < edges; ++e) raw.edge_labels[e] = e;
    raw.next_label = edges;
    if (nd) {
        raw.outer = lines.outer_token.empty() ? 0 : parse(lines.outer_token);
    }
    return PlaneGraph(std::move(raw));
}

inline std::string write_graph_cmap(const PlaneGraph& g) {
    std::ostringstream out;
    out << "cmap 1\n";
    out << "vertices " << g.vertex_count() << "\n";
    auto token = [&](GDart d) {
        return std::to_string(g.vertex_of(d)) + "." + std::to_string(g.pos_of(d));
    };
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        out << "v " << v << " " << g.degree(v);
        for (GDart d : g.rotation(v)) out << " " << token(g.alpha(d));
        out << "\n";
    }
    if (!g.is_trivial()) out << "outer " << token(g.outer_rep()) << "\n";
    return out.str();
}

using LoadedCmap = std::variant<CurveMap, PlaneGraph>;

// Curve vertex lines carry four dart tokens; graph lines lead with a
// bare degree, which tells the two apart.
inline LoadedCmap load_any_cmap(const std::string& text) {
    detail::CmapLines lines = detail::scan_cmap(text);
    if (lines.circle || lines.vertex_count == 0) return load_curve_cmap(text);
    if (lines.vertex_lines.empty()) return load_graph_cmap(text);
    const auto& first = lines.vertex_lines[0];
    bool curve_shaped = first.size() == 5 && first[1].find('.') != std::string::npos;
    return curve_shaped ? LoadedCmap(load_curve_cmap(text)) : LoadedCmap(load_graph_cmap(text));
}

}  // namespace curvekit
