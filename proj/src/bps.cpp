#include "qlie/bps.hpp"

#include <algorithm>
#include <map>

namespace qlie {

std::string BpsSymbol::str(const DynkinGraph& g) const {
    if (kind == Kind::real_stable) return "E~[" + root.str() + "]";
    return "E~" + g.vertex_names[vertex] + "(" + std::to_string(level) + ")";
}

std::vector<BpsSymbol> bps_basis(const RootSystem& rs, int cutoff) {
    if (rs.finite()) throw input_error("bps_basis: affine type required");
    if (cutoff < 0) throw input_error("bps_basis: cutoff must be >= 0");
    std::vector<BpsSymbol> out;
    int p = rs.graph().extending_vertex;
    if (cutoff == 0) {
        for (const auto& beta : rs.finite_subsystem_roots())
            out.push_back(BpsSymbol::real_stable(beta));
    } else {
        DimVector bound = rs.delta().scaled(cutoff);
        for (const auto& a : rs.positive_roots(bound.height() + 1)) {
            if (!leq(a, bound)) continue;
            if (rs.pairing(a, a) == 2) out.push_back(BpsSymbol::real_stable(a));
        }
        for (int m = 1; m <= cutoff; ++m)
            for (int k = 0; k < rs.rank(); ++k)
                if (k != p) out.push_back(BpsSymbol::component_fn(k, m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

AuditReport multiplicity_audit(const RootSystem& rs, int cutoff) {
    if (rs.finite()) throw input_error("multiplicity_audit: affine type required");
    AuditReport rep;
    auto basis = bps_basis(rs, cutoff);
    std::map<DimVector, int> found;
    for (const auto& s : basis) {
        DimVector grading = s.kind == BpsSymbol::Kind::real_stable
                                ? s.root
                                : rs.delta().scaled(s.level);
        found[grading]++;
    }
    int iprime = (int)rs.finite_vertices().size();
    // gradings to audit: every positive root within the basis range
    std::map<DimVector, int> expected;
    if (cutoff == 0) {
        for (const auto& beta : rs.finite_subsystem_roots()) expected[beta] = 1;
    } else {
        DimVector b = rs.delta().scaled(cutoff);
        for (const auto& a : rs.positive_roots(b.height() + 1)) {
            if (!leq(a, b)) continue;
            expected[a] = rs.pairing(a, a) == 2 ? 1 : iprime;
        }
    }
    for (const auto& [grading, exp] : expected) {
        AuditLine line;
        line.grading = grading.str();
        line.expected = exp;
        line.found = found.count(grading) ? found.at(grading) : 0;
        line.ok = line.expected == line.found;
        if (!line.ok) rep.ok = false;
        rep.lines.push_back(std::move(line));
    }
    // nothing outside the expected gradings
    for (const auto& [grading, cnt] : found)
        if (!expected.count(grading)) {
            rep.ok = false;
            rep.lines.push_back({grading.str(), 0, cnt, false});
        }
    return rep;
}

ConjectureReport conjecture_algebra_checks(const RootSystem& rs, const Cocycle& eps,
                                           int cutoff) {
    if (rs.finite())
        throw input_error("conjecture_algebra_checks: affine type required");
    if (cutoff < 1 || cutoff > 4)
        throw input_error("conjecture_algebra_checks: cutoff in 1..4");
    ConjectureReport rep;

    // (a) E^*_k(m) collapses to alpha_k(m) exactly
    for (int k : rs.finite_vertices())
        for (int m = 1; m <= cutoff; ++m) {
            LieElement e = ehat(k, m, eps, rs);
            if (!(e == LieElement::single(BasisSymbol::imaginary(k, m)))) {
                rep.ehat_ok = false;
                rep.notes.push_back("ehat(" + rs.graph().vertex_names[k] + "," +
                                    std::to_string(m) + ") != alpha_k(m)");
            }
        }

    // (b) graded bijection of the truncated algebra basis onto bps_basis
    auto lie = affine_basis(rs, cutoff);
    auto bps = bps_basis(rs, cutoff);
    if (lie.size() != bps.size()) {
        rep.bijection_ok = false;
        rep.notes.push_back("basis sizes differ: " + std::to_string(lie.size()) + " vs " +
                            std::to_string(bps.size()));
    } else {
        std::vector<BpsSymbol> mapped;
        for (const auto& s : lie)
            mapped.push_back(s.kind == BasisSymbol::Kind::real
                                 ? BpsSymbol::real_stable(s.root)
                                 : BpsSymbol::component_fn(s.vertex, s.level));
        std::sort(mapped.begin(), mapped.end());
        if (!(mapped == bps)) {
            rep.bijection_ok = false;
            rep.notes.push_back("graded index sets differ");
        }
    }

    // (c) the Nakajima character avoids every wall
    Character nak = nakajima_character(rs.graph(), rs.delta());
    if (!wall_test(rs, nak.values)) {
        rep.wall_ok = false;
        rep.notes.push_back("Nakajima character lies on a wall");
    }

    rep.ok = rep.ehat_ok && rep.bijection_ok && rep.wall_ok;
    rep.notes.push_back("geometric parts of the conjecture (stable loci, semistable "
                        "diagonal, S-equivalence) not machine-checked here");
    return rep;
}

} // namespace qlie
