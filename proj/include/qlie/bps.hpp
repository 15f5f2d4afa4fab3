#pragma once

#include <string>
#include <vector>

#include "qlie/lie_algebra.hpp"
#include "qlie/stability.hpp"

namespace qlie {

// Index of the conjectural basis of the affine positive part: one
// symbol per stable point class (positive real root) and one per
// exceptional-fiber component (vertex of I') and level.
struct BpsSymbol {
    enum class Kind { real_stable, component_fn };
    Kind kind = Kind::real_stable;
    DimVector root; // real_stable
    int vertex = -1; // component_fn: k in I'
    int level = 0;   // component_fn: m >= 1

    static BpsSymbol real_stable(DimVector a) {
        BpsSymbol s;
        s.kind = Kind::real_stable;
        s.root = std::move(a);
        return s;
    }
    static BpsSymbol component_fn(int k, int m) {
        BpsSymbol s;
        s.kind = Kind::component_fn;
        s.vertex = k;
        s.level = m;
        return s;
    }

    friend bool operator<(const BpsSymbol& a, const BpsSymbol& b) {
        if (a.kind != b.kind) return (int)a.kind < (int)b.kind;
        if (a.kind == Kind::real_stable) return a.root.c < b.root.c;
        if (a.level != b.level) return a.level < b.level;
        return a.vertex < b.vertex;
    }
    friend bool operator==(const BpsSymbol& a, const BpsSymbol& b) {
        return !(a < b) && !(b < a);
    }

    std::string str(const DynkinGraph& g) const;
};

// All symbols of delta-degree up to the cutoff: real roots bounded by
// cutoff * delta (the finite subsystem for cutoff 0) plus
// component_fn(k, m) for m <= cutoff.
std::vector<BpsSymbol> bps_basis(const RootSystem& rs, int cutoff);

struct AuditLine {
    std::string grading;
    int expected = 0;
    int found = 0;
    bool ok = false;
};
struct AuditReport {
    bool ok = true;
    std::vector<AuditLine> lines;
};

// Per-grading symbol counts against the root-space dimensions of the
// truncated affine algebra (1 for real gradings, |I'| for n delta).
AuditReport multiplicity_audit(const RootSystem& rs, int cutoff);

struct ConjectureReport {
    bool ok = true;
    bool ehat_ok = true;         // E^*_k(m) = alpha_k(m) exactly
    bool bijection_ok = true;    // graded basis bijection onto bps_basis
    bool wall_ok = true;         // Nakajima character off every wall
    std::vector<std::string> notes;
};

// The Lie-algebra-level content of the BPS conjecture; the geometric
// statements (stable loci, semistable diagonal, S-equivalence) are not
// machine-checked here.
ConjectureReport conjecture_algebra_checks(const RootSystem& rs, const Cocycle& eps,
                                           int cutoff);

} // namespace qlie
