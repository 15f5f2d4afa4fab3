#include "qlie/cocycle.hpp"

#include <algorithm>

#include "qlie/error.hpp"

namespace qlie {

Orientation::Orientation(const DynkinGraph& g, std::vector<int> chosen_arrows)
    : graph_(&g), chosen_(std::move(chosen_arrows)) {
    if ((int)chosen_.size() != g.edge_count())
        throw internal_error("orientation: wrong arrow count");
    for (int e = 0; e < g.edge_count(); ++e)
        if (chosen_[e] / 2 != e) throw internal_error("orientation: arrow/edge mismatch");
}

std::vector<Arrow> Orientation::arrows() const {
    std::vector<Arrow> out;
    out.reserve(chosen_.size());
    for (int h : chosen_) out.push_back(graph_->arrow(h));
    return out;
}

std::string Orientation::str() const {
    std::string s;
    for (int e = 0; e < graph_->edge_count(); ++e) {
        if (e) s += ',';
        Arrow a = graph_->arrow(chosen_[e]);
        s += graph_->vertex_names[a.src] + ">" + graph_->vertex_names[a.dst];
    }
    return s;
}

Orientation Orientation::parse(const DynkinGraph& g, const std::string& s) {
    std::vector<std::pair<int, int>> wanted;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) continue;
            auto pos = cur.find('>');
            if (pos == std::string::npos)
                throw input_error("bad orientation arrow '" + cur + "'");
            int src = g.vertex_by_name(cur.substr(0, pos));
            int dst = g.vertex_by_name(cur.substr(pos + 1));
            wanted.emplace_back(src, dst);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    std::vector<int> chosen(g.edge_count(), -1);
    for (auto [src, dst] : wanted) {
        bool placed = false;
        for (int e = 0; e < g.edge_count() && !placed; ++e) {
            if (chosen[e] >= 0) continue;
            Arrow a = g.arrow(2 * e);
            if (a.src == src && a.dst == dst) { chosen[e] = 2 * e; placed = true; }
            else if (a.src == dst && a.dst == src) { chosen[e] = 2 * e + 1; placed = true; }
        }
        if (!placed)
            throw input_error("orientation arrow " + std::to_string(src) + ">" +
                              std::to_string(dst) + " matches no free edge");
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (chosen[e] < 0)
            throw input_error("orientation does not cover every edge of " + g.type_label);
    return Orientation(g, std::move(chosen));
}

std::vector<Orientation> all_orientations(const DynkinGraph& g) {
    int m = g.edge_count();
    std::vector<Orientation> out;
    out.reserve(1u << m);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> chosen(m);
        for (int e = 0; e < m; ++e) chosen[e] = 2 * e + ((mask >> e) & 1);
        out.emplace_back(g, std::move(chosen));
    }
    return out;
}

Orientation canonical_orientation(const DynkinGraph& g) {
    std::vector<int> chosen(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        Arrow a = g.arrow(2 * e);
        // numeric label comparison; names are decimal by construction
        long sa = std::stol(g.vertex_names[a.src]);
        long sb = std::stol(g.vertex_names[a.dst]);
        chosen[e] = sa <= sb ? 2 * e : 2 * e + 1;
    }
    return Orientation(g, std::move(chosen));
}

Orientation reference_orientation(const DynkinGraph& g) {
    if (g.kind != GraphKind::finite)
        throw input_error("reference_orientation: finite type required");
    // 2-color by BFS depth from vertex 0; sources are the even class.
    std::vector<int> depth(g.rank(), -1);
    depth[0] = 0;
    std::vector<int> frontier = {0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier)
            for (int e = 0; e < g.edge_count(); ++e) {
                auto [a, b] = g.edges[e];
                int other = a == v ? b : b == v ? a : -1;
                if (other >= 0 && depth[other] < 0) {
                    depth[other] = depth[v] + 1;
                    next.push_back(other);
                }
            }
        frontier = std::move(next);
    }
    std::vector<int> chosen(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        Arrow a = g.arrow(2 * e);
        if (depth[a.src] % 2 == depth[a.dst] % 2)
            throw internal_error("reference_orientation: graph is not bipartite");
        chosen[e] = depth[a.src] % 2 == 0 ? 2 * e : 2 * e + 1;
    }
    return Orientation(g, std::move(chosen));
}

long long Cocycle::form(const DimVector& a, const DimVector& b) const {
    long long s = 0;
    for (int i = 0; i < (int)a.size(); ++i) s += (long long)a[i] * b[i];
    for (int e = 0; e < om_.graph().edge_count(); ++e) {
        Arrow h = om_.graph().arrow(om_.arrow_for_edge(e));
        s -= (long long)a[h.dst] * b[h.src];
    }
    return s;
}

} // namespace qlie
