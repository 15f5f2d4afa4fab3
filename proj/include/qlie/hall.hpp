#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlie/quiver_rep.hpp"

namespace qlie {

// Integer combination of iso-classes (Gabriel labels) of representations
// of one oriented quiver.
class HallElement {
  public:
    HallElement() = default;
    static HallElement single(RootPartition label, long long c = 1) {
        HallElement e;
        e.add_term(std::move(label), c);
        return e;
    }

    void add_term(RootPartition label, long long c) {
        if (c == 0) return;
        auto it = terms_.find(label);
        if (it == terms_.end()) {
            terms_.emplace(std::move(label), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<RootPartition, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    HallElement scaled(long long c) const {
        HallElement r;
        if (c == 0) return r;
        for (const auto& [l, v] : terms_) r.terms_.emplace(l, v * c);
        return r;
    }
    friend HallElement operator+(const HallElement& a, const HallElement& b) {
        HallElement r = a;
        for (const auto& [l, v] : b.terms_) r.add_term(l, v);
        return r;
    }
    friend HallElement operator-(const HallElement& a, const HallElement& b) {
        return a + b.scaled(-1);
    }
    friend bool operator==(const HallElement& a, const HallElement& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    std::map<RootPartition, long long> terms_;
};

// Counting polynomial of a filtration triple, lowest coefficient first.
struct HallPolynomial {
    RootPartition M, N, P;
    std::vector<long long> coeffs;

    long long eval(long long q) const {
        long long r = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * q + *it;
        return r;
    }
    long long at_one() const {
        long long r = 0;
        for (long long c : coeffs) r += c;
        return r;
    }
};

// Append-only disk cache of Hall polynomial coefficient lists. Records
// are "type;orientation;M;N;P;c0,c1,...;crc" with partition parts joined
// by '+' (';' is the field separator), one per line under a versioned
// header. A record failing its checksum is dropped and recounted.
class HallCache {
  public:
    // Empty directory disables persistence (pure in-memory accelerator).
    HallCache(std::string dir, std::string type, std::string orientation);

    std::optional<std::vector<long long>> lookup(const std::string& key) const;
    void store(const std::string& key, const std::vector<long long>& coeffs);

    bool corruption_seen() const { return corruption_seen_; }
    const std::string& file_path() const { return path_; }

    static std::string default_dir(); // QLIE_CACHE or a home/cwd fallback
    static std::string record_checksum(const std::string& payload);

  private:
    void load();

    std::string dir_, type_, orientation_, path_;
    std::map<std::string, std::vector<long long>> mem_;
    bool corruption_seen_ = false;
};

struct HallLimits {
    int max_total_dim = 8;
    int max_q = 16;
};

// Degenerate Hall algebra of one oriented Dynkin quiver: structure
// constants are submodule counts interpolated in the field size and
// evaluated at q = 1. The product convention puts the quotient type
// first: [N]*[P] = sum_M g^M_{N,P}(1) [M].
//
// Published values (polynomials, counts) are immutable; the instance
// itself memoizes sweeps and products, so use one instance per thread
// or add external synchronization.
class HallAlgebra {
  public:
    HallAlgebra(const RootSystem& rs, Orientation om, std::string cache_dir = "",
                HallLimits limits = {});
    HallAlgebra(const HallAlgebra&) = delete;
    HallAlgebra& operator=(const HallAlgebra&) = delete;

    const RootSystem& roots() const { return *rs_; }
    const Orientation& orientation() const { return om_; }
    const Cocycle& cocycle() const { return eps_; }

    // #{ W <= M_rep : W iso P, M/W iso N } over F_q, by enumeration.
    long long hall_number(const RootPartition& M, const RootPartition& N,
                          const RootPartition& P, int q);

    // Counts at deg+1 sampled prime powers, interpolated exactly and
    // verified at one control point.
    HallPolynomial hall_polynomial(const RootPartition& M, const RootPartition& N,
                                   const RootPartition& P);

    HallElement product(const HallElement& f, const HallElement& g);

    HallElement e_alpha(const DimVector& root) const;
    HallElement e_simple(int vertex) const;

    struct BracketCheck {
        bool ok = true;
        std::string detail;
    };
    // [E_a, E_b] = eps(a,b) E_{a+b} (or 0 when a+b is not a root).
    BracketCheck verify_bracket_E(const DimVector& a, const DimVector& b);

    // Iterated commutator of simple classes along a presentation; the
    // result is checked against the epsilon-product closed form.
    HallElement iterated_bracket_value(const std::vector<int>& presentation);

    // Serre relation sum_{p+q=1-i.j} (-1)^p C(1-i.j, p) Ei^p Ej Ei^q = 0.
    bool serre_in_hall(int i, int j);

    bool cache_corruption_seen() const { return cache_ && cache_->corruption_seen(); }

  private:
    RepContext& ctx(int q);

    // One subspace sweep of M at a fixed graded subdimension serves
    // every (quotient, sub) pair of that shape.
    using SweepTable = std::map<std::pair<RootPartition, RootPartition>, long long>;
    const SweepTable& sweep(const RootPartition& M, const DimVector& subdim, int q);

    const RootSystem* rs_;
    Orientation om_;
    Cocycle eps_;
    HallLimits limits_;
    std::unique_ptr<HallCache> cache_;
    std::map<int, std::unique_ptr<RepContext>> ctx_by_q_;
    std::map<std::string, SweepTable> sweeps_;
    std::map<std::string, HallElement> pair_products_;
};

// Computes component labels of E_{V,Omega} in the indexing by a fixed
// reference orientation: the Gabriel label of a generic representation
// supported on a subset of the reference arrows. Sampling runs at
// q in {101, 103} with fixed seeds, 16 samples per field per round; the
// winner must dominate every sampled hom fingerprint pointwise.
class GenericLabeler {
  public:
    GenericLabeler(const RootSystem& rs, Orientation om_ref);
    GenericLabeler(const GenericLabeler&) = delete;
    GenericLabeler& operator=(const GenericLabeler&) = delete;

    const Orientation& reference() const { return om_ref_; }

    RootPartition label(const DimVector& d, const std::vector<int>& active_arrows) const;
    RootPartition label_for_orientation(const DimVector& d, const Orientation& om) const;

  private:
    const RootSystem* rs_;
    Orientation om_ref_;
    std::vector<std::unique_ptr<RepContext>> ctxs_;
};

// One-shot convenience wrapper around GenericLabeler.
RootPartition generic_label(const RootSystem& rs, const Orientation& om_ref,
                            const DimVector& d, const std::vector<int>& active_arrows);

// Arrows of om_ref that om orients the same way.
std::vector<int> agreeing_arrows(const Orientation& om_ref, const Orientation& om);

} // namespace qlie
