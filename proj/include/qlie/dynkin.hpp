#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qlie/dimvec.hpp"
#include "qlie/error.hpp"

namespace qlie {

enum class GraphKind { finite, affine };

// One oriented edge h with initial vertex h' = src and terminal vertex
// h'' = dst. Arrows come in involutive pairs: arrow (2e) and (2e+1) are
// the two orientations of edge e, so h-bar is h ^ 1.
struct Arrow {
    int src = 0;
    int dst = 0;
    int edge = 0;
};

// Underlying graph of an ADE or extended ADE quiver. Vertices are dense
// indices 0..rank-1 with display labels matching the figures used
// throughout: type A is labeled 1..n; types D and E put the branch
// vertex at label 0; affine types put the extending vertex at label 0.
class DynkinGraph {
  public:
    std::string type_label;                 // "A3", "D~4", ...
    GraphKind kind = GraphKind::finite;
    std::vector<std::string> vertex_names;
    std::vector<std::pair<int, int>> edges; // unoriented, may repeat (A~1)
    int extending_vertex = -1;              // affine only

    int rank() const { return (int)vertex_names.size(); }
    int edge_count() const { return (int)edges.size(); }
    int arrow_count() const { return 2 * edge_count(); }

    Arrow arrow(int h) const {
        const auto& e = edges[h / 2];
        if (h % 2 == 0) return Arrow{e.first, e.second, h / 2};
        return Arrow{e.second, e.first, h / 2};
    }
    static int opposite(int h) { return h ^ 1; }

    int edges_between(int i, int j) const {
        int n = 0;
        for (const auto& e : edges)
            if ((e.first == i && e.second == j) || (e.first == j && e.second == i)) ++n;
        return n;
    }

    bool adjacent(int i, int j) const { return edges_between(i, j) > 0; }

    // Cartan pairing on simple roots: i.i = 2, i.j = -#edges(i,j).
    int simple_pairing(int i, int j) const { return i == j ? 2 : -edges_between(i, j); }

    int vertex_by_name(const std::string& name) const {
        for (int i = 0; i < rank(); ++i)
            if (vertex_names[i] == name) return i;
        throw input_error("unknown vertex '" + name + "' in " + type_label);
    }

    DimVector zero_vector() const { return DimVector(rank()); }
    DimVector simple_root(int i) const { return DimVector::unit(rank(), i); }
};

// Build a graph from a type label: "A1".."A8", "D4".."D8", "E6".."E8",
// and extended types "A~1".."A~8", "D~4".."D~8", "E~6".."E~8".
DynkinGraph build_graph(const std::string& label);

} // namespace qlie
