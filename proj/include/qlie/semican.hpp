#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlie/hall.hpp"
#include "qlie/lie_algebra.hpp"

namespace qlie {

// Shared per-type workspace for coefficient computations: the root
// system, the reference orientation (edges from lower to higher label)
// and the sampling labeler that keys components by root partitions.
class SemicanContext {
  public:
    explicit SemicanContext(const std::string& type);
    SemicanContext(const SemicanContext&) = delete;
    SemicanContext& operator=(const SemicanContext&) = delete;

    const RootSystem& roots() const { return rs_; }
    const Orientation& reference() const { return ref_; }
    const GenericLabeler& labeler() const { return labeler_; }

  private:
    RootSystem rs_;
    Orientation ref_;
    GenericLabeler labeler_;
};

// Deterministic presentation of a positive root by simple roots with
// every partial sum a root (smallest usable vertex index at each step).
std::vector<int> canonical_presentation(const RootSystem& rs, const DimVector& alpha);

// Every presentation of alpha (sequences of simple roots, partial sums
// roots). Small in the tested ranks.
std::vector<std::vector<int>> all_presentations(const RootSystem& rs, const DimVector& alpha);

// prod_{i<j} eps_Omega(alpha_{k_i}, alpha_{k_j}).
int c_orientation(const std::vector<int>& presentation, const Cocycle& eps,
                  const RootSystem& rs);

// Orientation-component coefficients of one presentation, keyed by the
// component labels of E_{V,Omega} over all orientations. Two
// orientations sharing a label must agree on the sign.
struct OrientationVector {
    std::map<RootPartition, int> by_label;
    std::vector<std::pair<std::string, RootPartition>> orientation_labels;
};
OrientationVector orientation_component_vector(const SemicanContext& ctx,
                                               const DimVector& alpha,
                                               const std::vector<int>& presentation);

// Jordan type of sum E_{i, j+1} over the interval parts [i..j] of a
// type-A root partition: a partition of n+1, largest block first.
std::vector<int> jordan_type_an(const RootPartition& y, int n);

// Sign of a permutation with the given cycle type.
int sign_character(const std::vector<int>& lambda);

// Type-A coefficient: sign character of the Jordan type, normalized so
// the one-part partition gets +1 (that is the label of the reference
// orientation component).
int c_an(const RootSystem& rs, const DimVector& alpha, const RootPartition& y,
         bool normalize = true);

struct CrossCheckReport {
    bool ok = true;
    int global_sign = 1;
    std::vector<std::string> mismatches;
};
// Prop 5.4 against Prop 5.3: orientation-product coefficients equal the
// sign-character coefficients up to one global sign, for every root.
CrossCheckReport cross_check_an(int n);

enum class Provenance { computed_orientation, computed_an, stored_paper, unknown };
std::string provenance_name(Provenance p);

struct TableEntry {
    long long value = 0;
    Provenance prov = Provenance::unknown;
};

struct CoefficientTable {
    std::string type;
    DimVector root;
    std::map<RootPartition, TableEntry> entries;
    bool sign_disclaimer = true; // values canonical only up to one global sign
    bool file_checksum_ok = true;
    std::string source_file;

    int stored_count() const;
};

// Directory containing the bundled reference tables: QLIE_DATA overrides
// the compiled-in source location.
std::string default_data_dir();

// Load "D4-thetamax" or "D5-thetamax": stored paper entries from the
// data file, orientation components computed and merged, anything else
// marked unknown. With normalize, the whole table is flipped if needed
// so the reference-orientation label carries a positive entry.
CoefficientTable load_reference_table(const std::string& case_name,
                                      const std::string& data_dir = "",
                                      bool normalize = true);

struct ValidationItem {
    std::string check;
    bool passed = true;
    std::string detail;
};
struct ValidationReport {
    bool ok = true;
    std::vector<ValidationItem> items;
};
ValidationReport validate_table(const CoefficientTable& t);

// Full decomposition of E*_alpha by root partitions: complete in type A
// (sign character), complete for the D4/D5 highest roots (stored paper
// values merged with orientation components), orientation part plus
// unknown markers elsewhere.
CoefficientTable decompose_e_star(const SemicanContext& ctx, const DimVector& alpha,
                                  const std::string& data_dir = "", bool normalize = true);

// Jordan type of ad(sum of root vectors of the parts) on the full
// cocycle Lie algebra: the orbit fingerprint used in place of the
// class map outside type A.
std::vector<int> ad_jordan_fingerprint(const RootSystem& rs, const RootPartition& y);

} // namespace qlie
