#include "qlie/dynkin.hpp"

namespace qlie {

namespace {

void name_vertices(DynkinGraph& g, int count, int first_label) {
    for (int i = 0; i < count; ++i) g.vertex_names.push_back(std::to_string(first_label + i));
}

DynkinGraph finite_a(int n) {
    DynkinGraph g;
    g.kind = GraphKind::finite;
    name_vertices(g, n, 1); // A_n vertices are labeled 1..n
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

DynkinGraph finite_d(int n) {
    // Branch vertex 0 with legs 1, 2 and chain 0-3-4-...-(n-1),
    // matching the D4/D5 figures (center 0; legs 1, 2; chain 3, 4).
    DynkinGraph g;
    g.kind = GraphKind::finite;
    name_vertices(g, n, 0);
    g.edges.emplace_back(0, 1);
    g.edges.emplace_back(0, 2);
    g.edges.emplace_back(0, 3);
    for (int i = 3; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

DynkinGraph finite_e(int n) {
    // Branch vertex 0; short leg 1; middle arm 2-3; long arm 4..(n-1).
    DynkinGraph g;
    g.kind = GraphKind::finite;
    name_vertices(g, n, 0);
    g.edges.emplace_back(0, 1);
    g.edges.emplace_back(0, 2);
    g.edges.emplace_back(2, 3);
    g.edges.emplace_back(0, 4);
    for (int i = 4; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

DynkinGraph affine_a(int n) {
    // Cycle 0-1-...-n-0 with extending vertex 0. A~1 is the double edge.
    DynkinGraph g;
    g.kind = GraphKind::affine;
    g.extending_vertex = 0;
    name_vertices(g, n + 1, 0);
    if (n == 1) {
        g.edges.emplace_back(0, 1);
        g.edges.emplace_back(0, 1);
        return g;
    }
    for (int i = 0; i < n; ++i) g.edges.emplace_back(i, i + 1);
    g.edges.emplace_back(n, 0);
    return g;
}

DynkinGraph affine_d(int n) {
    // Leaves 0, 1 attached to vertex 4; leaves 2, 3 attached to vertex n;
    // chain 4-5-...-n. For n = 4 this is the four-legged star around 4.
    DynkinGraph g;
    g.kind = GraphKind::affine;
    g.extending_vertex = 0;
    name_vertices(g, n + 1, 0);
    g.edges.emplace_back(0, 4);
    g.edges.emplace_back(1, 4);
    g.edges.emplace_back(2, n);
    g.edges.emplace_back(3, n);
    for (int i = 4; i < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

DynkinGraph affine_e(int n) {
    DynkinGraph g;
    g.kind = GraphKind::affine;
    g.extending_vertex = 0;
    name_vertices(g, n + 1, 0);
    if (n == 6) {
        // Center 6, three arms of two edges; tips 0, 2, 4.
        g.edges.emplace_back(0, 1);
        g.edges.emplace_back(1, 6);
        g.edges.emplace_back(2, 3);
        g.edges.emplace_back(3, 6);
        g.edges.emplace_back(4, 5);
        g.edges.emplace_back(5, 6);
    } else if (n == 7) {
        // Center 7, arms 0-1-2-7, 3-4-5-7 and leg 6-7.
        g.edges.emplace_back(0, 1);
        g.edges.emplace_back(1, 2);
        g.edges.emplace_back(2, 7);
        g.edges.emplace_back(3, 4);
        g.edges.emplace_back(4, 5);
        g.edges.emplace_back(5, 7);
        g.edges.emplace_back(6, 7);
    } else {
        // Center 8, arms 0-1-2-3-4-8, 5-6-8 and leg 7-8.
        g.edges.emplace_back(0, 1);
        g.edges.emplace_back(1, 2);
        g.edges.emplace_back(2, 3);
        g.edges.emplace_back(3, 4);
        g.edges.emplace_back(4, 8);
        g.edges.emplace_back(5, 6);
        g.edges.emplace_back(6, 8);
        g.edges.emplace_back(7, 8);
    }
    return g;
}

} // namespace

DynkinGraph build_graph(const std::string& label) {
    if (label.size() < 2) throw input_error("unknown type label '" + label + "'");
    char family = label[0];
    bool affine = label[1] == '~';
    int n = 0;
    try {
        n = std::stoi(label.substr(affine ? 2 : 1));
    } catch (...) {
        throw input_error("unknown type label '" + label + "'");
    }

    DynkinGraph g;
    if (!affine) {
        if (family == 'A' && n >= 1 && n <= 8) g = finite_a(n);
        else if (family == 'D' && n >= 4 && n <= 8) g = finite_d(n);
        else if (family == 'E' && n >= 6 && n <= 8) g = finite_e(n);
        else throw input_error("unknown type label '" + label + "'");
    } else {
        if (family == 'A' && n >= 1 && n <= 8) g = affine_a(n);
        else if (family == 'D' && n >= 4 && n <= 8) g = affine_d(n);
        else if (family == 'E' && n >= 6 && n <= 8) g = affine_e(n);
        else throw input_error("unknown type label '" + label + "'");
    }
    g.type_label = label;
    for (const auto& e : g.edges)
        if (e.first == e.second) throw internal_error("graph has a loop edge");
    return g;
}

} // namespace qlie
