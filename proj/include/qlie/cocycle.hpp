#pragma once

#include <string>
#include <vector>

#include "qlie/dimvec.hpp"
#include "qlie/dynkin.hpp"

namespace qlie {

// Choice of one direction per edge: a subset Omega of the oriented-edge
// set H with Omega and its involution image partitioning H.
class Orientation {
  public:
    Orientation(const DynkinGraph& g, std::vector<int> chosen_arrows);

    const DynkinGraph& graph() const { return *graph_; }

    bool contains_arrow(int h) const { return chosen_[h / 2] == h; }
    int arrow_for_edge(int e) const { return chosen_[e]; }
    std::vector<Arrow> arrows() const;

    // Arrows "i>j" joined by commas, using vertex display labels.
    std::string str() const;
    static Orientation parse(const DynkinGraph& g, const std::string& s);

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.chosen_ == b.chosen_;
    }
    friend bool operator<(const Orientation& a, const Orientation& b) {
        return a.chosen_ < b.chosen_;
    }

  private:
    const DynkinGraph* graph_;
    std::vector<int> chosen_; // arrow id per edge
};

// All 2^(#edges) orientations in a deterministic order.
std::vector<Orientation> all_orientations(const DynkinGraph& g);

// Edges oriented from lower to higher display label; the default
// orientation when none is specified.
Orientation canonical_orientation(const DynkinGraph& g);

// The alternating orientation of a finite Dynkin tree: every vertex is
// a source or a sink, with sources in the bipartition class of vertex
// 0. Component indexing and table normalization key off this one; the
// D4/D5 reference tables are only consistent with the alternating
// choice.
Orientation reference_orientation(const DynkinGraph& g);

// Orientation-twisted form on Z[I] and its sign exponential, the
// lattice cocycle fixing all structure constants here.
class Cocycle {
  public:
    explicit Cocycle(Orientation om) : om_(std::move(om)) {}

    const Orientation& orientation() const { return om_; }

    // <a,b> = sum_i a_i b_i - sum_{h in Omega} a_{h''} b_{h'}
    long long form(const DimVector& a, const DimVector& b) const;

    // epsilon(a,b) = (-1)^<a,b>
    int epsilon(const DimVector& a, const DimVector& b) const {
        return (form(a, b) % 2 + 2) % 2 == 0 ? 1 : -1;
    }

  private:
    Orientation om_;
};

} // namespace qlie
