#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlie/quiver_rep.hpp"
#include "qlie/rational.hpp"

namespace qlie {

// Additive function on dimension vectors, stored by its values on the
// vertices. King-style characters vanish on their ambient vector.
struct Character {
    std::vector<Rational> values;
    DimVector ambient;

    Rational eval(const DimVector& v) const {
        Rational s(0);
        for (int i = 0; i < v.size(); ++i)
            if (v[i] != 0) s += values[i] * Rational(v[i]);
        return s;
    }
};

// Slope condition mu = c / r with r strictly positive on every vertex.
struct SlopeCondition {
    std::vector<Rational> c;
    std::vector<Rational> r;
};

// Theta_{V,Omega}(V') = sum_{h in Omega} (dim V_{h'} dim V'_{h''} -
// dim V'_{h'} dim V_{h''}); antisymmetric, so it vanishes on V itself.
Character king_character(const Orientation& om, const DimVector& ambient);

// theta_mu(V') = -c(V') + (c(V)/r(V)) r(V').
Character slope_character(const SlopeCondition& mu, const DimVector& ambient);

// -1 on each k in I', with the extending-vertex value chosen so the
// character vanishes on the ambient vector.
Character nakajima_character(const DynkinGraph& g, const DimVector& ambient);

// The extending vertex is a sink and every vertex reaches it along the
// orientation.
bool flows_to_extending(const Orientation& om, int p);

enum class Verdict { stable, semistable_not_stable, unstable };
std::string verdict_name(Verdict v);

struct StabilityLimits {
    int max_total_dim = 7;
    int max_q = 4;
};

struct StabilityResult {
    Verdict verdict = Verdict::stable;
    std::optional<DimVector> witness; // subspace violating strict positivity
};

// Verdict by exhaustive enumeration of x-stable graded subspaces. The
// input must be a point of Lambda_V: the moment map components must
// vanish and x must be nilpotent (automatic for single-orientation
// representations on a Dynkin quiver).
StabilityResult is_stable(const FqRep& x, const Character& theta,
                          const StabilityLimits& limits = {});

struct HarnessEntry {
    RootPartition label;
    Verdict verdict = Verdict::stable;
    std::string witness = "-";
    bool ok = false; // one-part label <=> stable
};

struct HarnessReport {
    bool all_ok = true;
    std::vector<HarnessEntry> entries;
};

// Stability Lemma check: over every iso-class of dimension alpha, the
// King-character verdict must be stable exactly for the one-part label.
HarnessReport stability_lemma_harness(const RepContext& ctx, const DimVector& alpha,
                                      const StabilityLimits& limits = {});

// Non-degeneracy of a character on I': no positive root of the finite
// subsystem pairs to zero. theta is indexed by the affine vertex set;
// the extending coordinate is ignored.
bool wall_test(const RootSystem& affine_rs, const std::vector<Rational>& theta);

} // namespace qlie
