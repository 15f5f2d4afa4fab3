#include "qlie/stability.hpp"

#include <algorithm>

namespace qlie {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::semistable_not_stable: return "semistable-not-stable";
        case Verdict::unstable: return "unstable";
    }
    return "?";
}

Character king_character(const Orientation& om, const DimVector& ambient) {
    const DynkinGraph& g = om.graph();
    Character th;
    th.ambient = ambient;
    th.values.assign(g.rank(), Rational(0));
    for (int e = 0; e < g.edge_count(); ++e) {
        Arrow h = g.arrow(om.arrow_for_edge(e));
        th.values[h.dst] += Rational(ambient[h.src]);
        th.values[h.src] -= Rational(ambient[h.dst]);
    }
    return th;
}

Character slope_character(const SlopeCondition& mu, const DimVector& ambient) {
    int n = ambient.size();
    if ((int)mu.c.size() != n || (int)mu.r.size() != n)
        throw input_error("slope_character: condition size mismatch");
    for (const auto& rv : mu.r)
        if (!(Rational(0) < rv)) throw input_error("slope_character: r must be positive");
    if (ambient.is_zero()) throw input_error("slope_character: ambient must be nonzero");
    Rational cV(0), rV(0);
    for (int i = 0; i < n; ++i) {
        cV += mu.c[i] * Rational(ambient[i]);
        rV += mu.r[i] * Rational(ambient[i]);
    }
    Character th;
    th.ambient = ambient;
    th.values.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) th.values[i] = -mu.c[i] + cV / rV * mu.r[i];
    return th;
}

Character nakajima_character(const DynkinGraph& g, const DimVector& ambient) {
    if (g.kind != GraphKind::affine)
        throw input_error("nakajima_character: affine graph required");
    int p = g.extending_vertex;
    if (ambient[p] == 0)
        throw input_error("nakajima_character: ambient has zero extending coordinate");
    Character th;
    th.ambient = ambient;
    th.values.assign(g.rank(), Rational(-1));
    Rational sum(0);
    for (int i = 0; i < g.rank(); ++i)
        if (i != p) sum += Rational(ambient[i]);
    th.values[p] = sum / Rational(ambient[p]);
    return th;
}

bool flows_to_extending(const Orientation& om, int p) {
    const DynkinGraph& g = om.graph();
    if (g.kind != GraphKind::affine) throw input_error("flows_to_extending: affine required");
    for (const Arrow& a : om.arrows())
        if (a.src == p) return false; // p must be a sink
    // walk the arrows backwards from p; everything must be reached
    std::vector<bool> reached(g.rank(), false);
    reached[p] = true;
    std::vector<int> frontier = {p};
    while (!frontier.empty()) {
        int v = frontier.back();
        frontier.pop_back();
        for (const Arrow& a : om.arrows())
            if (a.dst == v && !reached[a.src]) {
                reached[a.src] = true;
                frontier.push_back(a.src);
            }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

StabilityResult is_stable(const FqRep& x, const Character& theta,
                          const StabilityLimits& limits) {
    if (!theta.eval(x.dim).is_zero())
        throw input_error("is_stable: theta(dim x) != 0");
    if (x.total_dim() > limits.max_total_dim)
        throw resource_error("is_stable: dimension bound exceeded");
    if (x.F->q() > limits.max_q) throw resource_error("is_stable: field bound exceeded");
    if (!moment_map_vanishes(x))
        throw input_error("is_stable: moment map does not vanish");
    if (!is_nilpotent(x)) throw input_error("is_stable: representation is not nilpotent");

    bool saw_zero = false;
    std::optional<DimVector> witness;

    // all proper nonzero subdimension vectors
    int n = x.dim.size();
    DimVector a(n);
    while (true) {
        int i = 0;
        while (i < n && a[i] == x.dim[i]) a[i++] = 0;
        if (i == n) break;
        ++a[i];
        if (a.is_zero() || a == x.dim) continue;
        for (const auto& W : graded_subspaces(*x.F, x.dim, a)) {
            if (!subspace_is_stable(x, W)) continue;
            Rational v = theta.eval(a);
            if (v < Rational(0))
                return {Verdict::unstable, a};
            if (v.is_zero() && !saw_zero) {
                saw_zero = true;
                witness = a;
            }
            break; // all subspaces of this graded dimension share theta
        }
    }
    if (saw_zero) return {Verdict::semistable_not_stable, witness};
    return {Verdict::stable, std::nullopt};
}

HarnessReport stability_lemma_harness(const RepContext& ctx, const DimVector& alpha,
                                      const StabilityLimits& limits) {
    if (!ctx.roots().is_positive_root(alpha))
        throw input_error("stability_lemma_harness: alpha must be a positive root");
    Character theta = king_character(ctx.orientation(), alpha);
    HarnessReport rep;
    RepLimits rl;
    rl.max_total_dim = limits.max_total_dim;
    rl.max_q = limits.max_q;
    for (const auto& [label, r] : enumerate_reps(ctx, alpha, rl)) {
        HarnessEntry e;
        e.label = label;
        StabilityResult sr = is_stable(r, theta, limits);
        e.verdict = sr.verdict;
        if (sr.witness) e.witness = sr.witness->str();
        bool expect_stable = label.part_count() == 1;
        e.ok = expect_stable == (sr.verdict == Verdict::stable);
        if (!e.ok) rep.all_ok = false;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

bool wall_test(const RootSystem& affine_rs, const std::vector<Rational>& theta) {
    if (affine_rs.finite()) throw input_error("wall_test: affine context required");
    if ((int)theta.size() != affine_rs.rank())
        throw input_error("wall_test: theta size mismatch");
    for (const auto& beta : affine_rs.finite_subsystem_roots()) {
        Rational s(0);
        for (int i = 0; i < affine_rs.rank(); ++i)
            if (beta[i] != 0) s += theta[i] * Rational(beta[i]);
        if (s.is_zero()) return false;
    }
    return true;
}

} // namespace qlie
