#pragma once

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvekit/curve_map.hpp"

namespace curvekit {

// Double-occurrence word of a unicursal curve together with the Gauss
// sign of each crossing.  word[i] is the vertex id of the i-th arrival;
// positions/sign are indexed by vertex id.  A code parsed from text has
// vertex ids assigned by first occurrence.
struct SignedGaussCode {
    std::vector<int> word;
    std::vector<int> occurrence;                   // 1 or 2, parallel to word
    std::vector<int> sign;                         // per vertex id
    std::vector<std::array<int, 2>> positions;     // per vertex id

    int crossings() const { return static_cast<int>(sign.size()); }
};

// Sign rule: a crossing is positive iff the entry dart of the second
// passage is the counterclockwise successor of the exit dart of the
// first passage.  Equivalently the winding number of the moving point
// increases at the first passage (pinned by a property test against the
// Alexander numbering).
inline SignedGaussCode gauss_code(const CurveMap& m) {
    SignedGaussCode code;
    if (m.is_circle()) return code;
    std::vector<Dart> t = m.traversal();
    if (t.size() != 2 * m.vertex_count()) throw ValidationError("not unicursal");
    std::size_t n = m.vertex_count();
    code.sign.assign(n, 0);
    code.positions.assign(n, {-1, -1});
    code.word.reserve(2 * n);
    code.occurrence.reserve(2 * n);
    for (std::size_t i = 0; i < t.size(); ++i) {
        int v = static_cast<int>(dart_vertex(m.alpha(t[i])));
        code.word.push_back(v);
        if (code.positions[v][0] < 0) {
            code.positions[v][0] = static_cast<int>(i);
            code.occurrence.push_back(1);
        } else {
            code.positions[v][1] = static_cast<int>(i);
            code.occurrence.push_back(2);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        int i = code.positions[v][0];
        int j = code.positions[v][1];
        Dart first_exit = t[(i + 1) % t.size()];
        Dart second_entry = m.alpha(t[j]);
        code.sign[v] = (second_entry == rotate(first_exit)) ? 1 : -1;
    }
    return code;
}

inline bool interleaved(const SignedGaussCode& code, int x, int y) {
    if (x == y) throw std::invalid_argument("interleaved: crossings must differ");
    int a1 = code.positions[x][0], a2 = code.positions[x][1];
    int b1 = code.positions[y][0], b2 = code.positions[y][1];
    bool in1 = a1 < b1 && b1 < a2;
    bool in2 = a1 < b2 && b2 < a2;
    return in1 != in2;
}

namespace detail {
inline std::string spreadsheet_label(int k) {
    std::string s;
    ++k;
    while (k > 0) {
        --k;
        s.insert(s.begin(), static_cast<char>('a' + k % 26));
        k /= 26;
    }
    return s;
}
}  // namespace detail

// Single line of `<label><sign>` tokens in traversal order, labels
// assigned alphabetically by first visit.
inline std::string format_gauss(const SignedGaussCode& code) {
    std::vector<int> label(code.sign.size(), -1);
    int next = 0;
    std::string out;
    for (std::size_t i = 0; i < code.word.size(); ++i) {
        int v = code.word[i];
        if (label[v] < 0) label[v] = next++;
        if (i) out += ' ';
        out += detail::spreadsheet_label(label[v]);
        out += code.sign[v] > 0 ? '+' : '-';
    }
    return out;
}

inline SignedGaussCode parse_gauss(const std::string& text) {
    SignedGaussCode code;
    std::istringstream in(text);
    std::string tok;
    std::vector<std::string> names;
    while (in >> tok) {
        if (tok.size() < 2) throw ParseError("gauss token too short: " + tok);
        char sc = tok.back();
        if (sc != '+' && sc != '-') throw ParseError("gauss token missing sign: " + tok);
        std::string name = tok.substr(0, tok.size() - 1);
        int id = -1;
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k] == name) id = static_cast<int>(k);
        if (id < 0) {
            id = static_cast<int>(names.size());
            names.push_back(name);
            code.sign.push_back(sc == '+' ? 1 : -1);
            code.positions.push_back({-1, -1});
        } else if (code.sign[id] != (sc == '+' ? 1 : -1)) {
            throw ParseError("inconsistent sign for crossing " + name);
        }
        int pos = static_cast<int>(code.word.size());
        if (code.positions[id][0] < 0) {
            code.positions[id][0] = pos;
            code.occurrence.push_back(1);
        } else if (code.positions[id][1] < 0) {
            code.positions[id][1] = pos;
            code.occurrence.push_back(2);
        } else {
            throw ParseError("crossing " + name + " appears more than twice");
        }
        code.word.push_back(id);
    }
    for (std::size_t v = 0; v < code.sign.size(); ++v)
        if (code.positions[v][1] < 0)
            throw ParseError("crossing " + names[v] + " appears only once");
    return code;
}

}  // namespace curvekit
