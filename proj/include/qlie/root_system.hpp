#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qlie/dimvec.hpp"
#include "qlie/dynkin.hpp"

namespace qlie {

// Multiset of positive roots with a fixed sum, stored sorted in the
// canonical order (height, then coordinate-lex) so equal multisets have
// identical encodings.
struct RootPartition {
    std::vector<DimVector> parts;
    DimVector total;

    RootPartition() = default;
    RootPartition(std::vector<DimVector> p, int rank);

    int part_count() const { return (int)parts.size(); }

    friend bool operator==(const RootPartition& a, const RootPartition& b) {
        return a.parts == b.parts && a.total == b.total;
    }
    friend bool operator<(const RootPartition& a, const RootPartition& b) {
        if (a.total != b.total) return a.total < b.total;
        return a.parts < b.parts;
    }

    std::string str() const; // semicolon-joined root encodings
    static RootPartition parse(const std::string& s, int rank);
};

// Root system attached to a Dynkin graph. Finite systems enumerate all
// positive roots once; affine systems enumerate lazily below a height
// cutoff (the affine system is infinite).
class RootSystem {
  public:
    explicit RootSystem(DynkinGraph g);

    const DynkinGraph& graph() const { return graph_; }
    bool finite() const { return graph_.kind == GraphKind::finite; }
    int rank() const { return graph_.rank(); }

    // Bilinear extension of the Cartan pairing i.j.
    long long pairing(const DimVector& a, const DimVector& b) const;

    // Positive roots. Finite type ignores the cutoff; affine type
    // requires one and returns roots of height strictly below it
    // (real roots and the imaginary multiples of delta).
    std::vector<DimVector> positive_roots(std::optional<int> height_cutoff = std::nullopt) const;

    bool is_positive_root(const DimVector& a) const;
    bool is_real_root(const DimVector& a) const; // positive real

    DimVector highest_root() const; // finite only
    DimVector delta() const;        // affine only

    // Affine: class of a in Z[I]/Z delta, written on I' = I - {p}.
    // Returned with rank() coordinates, extending coordinate zero.
    DimVector imaginary_class(const DimVector& a) const;
    std::vector<int> finite_vertices() const; // I' in index order

    // Affine: positive roots of the finite subsystem on I', embedded in
    // Z[I] with extending coordinate zero.
    const std::vector<DimVector>& finite_subsystem_roots() const;

    // All multisets of positive roots summing to a (finite type only).
    std::vector<RootPartition> root_partitions(const DimVector& a) const;

  private:
    void enumerate_finite();
    void compute_delta();

    DynkinGraph graph_;
    std::vector<DimVector> finite_pos_;      // finite kind: all positive roots
    std::set<DimVector> finite_pos_set_;
    DimVector delta_;                        // affine kind
    std::vector<DimVector> finite_sub_pos_;  // affine kind: roots of I'
    std::set<DimVector> finite_sub_set_;
};

} // namespace qlie
