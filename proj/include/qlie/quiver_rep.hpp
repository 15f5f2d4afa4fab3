#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "qlie/cocycle.hpp"
#include "qlie/fmatrix.hpp"
#include "qlie/root_system.hpp"

namespace qlie {

// Deterministic 64-bit generator (splitmix64), seeded from strings so
// every sampled representation is reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    static std::uint64_t hash_string(const std::string& s);

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    Gf::elem next_elem(const Gf& F) { return (Gf::elem)(next() % F.q()); }

  private:
    std::uint64_t state_;
};

// Representation of a quiver over F_q: one matrix per oriented edge of
// H (zero off the chosen orientation for single-quiver representations).
// Matrix for arrow h maps V_{h'} to V_{h''}, so its shape is
// dim_{h''} x dim_{h'}.
struct FqRep {
    const Gf* F = nullptr;
    const DynkinGraph* graph = nullptr;
    DimVector dim;
    std::vector<FMatrix> mats; // indexed by arrow id

    static FqRep zero(const Gf& F, const DynkinGraph& g, DimVector d);

    int total_dim() const { return dim.height(); }
    FMatrix& mat(int h) { return mats[h]; }
    const FMatrix& mat(int h) const { return mats[h]; }

    // Block-diagonal direct sum (dimensions add, matrices stack).
    static FqRep direct_sum(const FqRep& a, const FqRep& b);
};

// dim Hom(M, N) as representations: intertwiners through every arrow
// that carries a matrix in either representation.
int hom_dim(const FqRep& M, const FqRep& N);
int end_dim(const FqRep& M);

// Moment map components sum_{h: h''=i} eps(h) x_h x_hbar with eps = +1
// on even arrow ids and -1 on their involution partners.
bool moment_map_vanishes(const FqRep& x);

// Nilpotency in the path-composition sense: the chain of graded images
// under all arrows must reach zero.
bool is_nilpotent(const FqRep& x);

struct RepLimits {
    int max_total_dim = 8;
    int max_q = 16;
};

// Per-(orientation, q) workspace: certified indecomposable
// representatives for every positive root, the hom table between them,
// and exact iso-class identification from hom fingerprints.
class RepContext {
  public:
    RepContext(const RootSystem& rs, Orientation om, int q);
    RepContext(const RepContext&) = delete;
    RepContext& operator=(const RepContext&) = delete;

    const RootSystem& roots() const { return *rs_; }
    const Orientation& orientation() const { return om_; }
    const Gf& field() const { return *F_; }

    const FqRep& indecomposable(const DimVector& root) const;
    FqRep rep_for_label(const RootPartition& label) const;

    long long hom_between_roots(const DimVector& a, const DimVector& b) const;

    // (dim Hom(M_beta, x))_beta in positive-root order.
    std::vector<int> fingerprint(const FqRep& x) const;
    std::vector<int> fingerprint_of_label(const RootPartition& label) const;

    // Gabriel label of x. Candidates are the root partitions of dim x;
    // hom probes against single indecomposables cut the candidate set
    // down (fingerprints separate iso-classes in finite type), so only
    // a few of the |R+| coordinates are ever computed.
    RootPartition identify(const FqRep& x) const;

    // Random representation supported on the given arrows (arrow ids
    // must belong to the orientation).
    FqRep random_rep(const DimVector& d, const std::vector<int>& support_arrows, Rng& rng) const;

  private:
    FqRep build_indecomposable(const DimVector& root) const;
    struct Candidate {
        RootPartition label;
        std::vector<int> fingerprint;
    };
    const std::vector<Candidate>& candidates_for(const DimVector& d) const;

    const RootSystem* rs_;
    Orientation om_;
    const Gf* F_;
    std::vector<DimVector> pos_roots_;
    std::map<DimVector, FqRep> indec_;
    std::vector<std::vector<int>> hom_; // hom_[i][j] = dim Hom(M_i, M_j)
    mutable std::mutex cand_mu_;
    mutable std::map<DimVector, std::vector<Candidate>> cand_;
};

// One explicit representative per iso-class of dimension d; the labels
// are exactly the root partitions of d.
std::vector<std::pair<RootPartition, FqRep>> enumerate_reps(const RepContext& ctx,
                                                            const DimVector& d,
                                                            const RepLimits& limits = {});

// Graded subspace W of an FqRep, one row-basis in RREF per vertex.
struct GradedSubspace {
    std::vector<FMatrix> rows; // a_i x d_i
    DimVector dim;
};

// All graded subspaces of the given subdimension vector.
std::vector<GradedSubspace> graded_subspaces(const Gf& F, const DimVector& d,
                                             const DimVector& a);

bool subspace_is_stable(const FqRep& x, const GradedSubspace& W);

// Sub- and quotient representations carried by an x-stable subspace;
// nullopt when W is not x-stable (the basis change exposes both).
std::optional<std::pair<FqRep, FqRep>> try_sub_quotient(const FqRep& x,
                                                        const GradedSubspace& W);

// As above but throws on an unstable subspace.
std::pair<FqRep, FqRep> sub_quotient(const FqRep& x, const GradedSubspace& W);

} // namespace qlie
