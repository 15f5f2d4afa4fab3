#include "qlie/quiver_rep.hpp"

#include <algorithm>

namespace qlie {

std::uint64_t Rng::hash_string(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

FqRep FqRep::zero(const Gf& F, const DynkinGraph& g, DimVector d) {
    FqRep r;
    r.F = &F;
    r.graph = &g;
    r.dim = std::move(d);
    r.mats.reserve(g.arrow_count());
    for (int h = 0; h < g.arrow_count(); ++h) {
        Arrow a = g.arrow(h);
        r.mats.emplace_back(F, r.dim[a.dst], r.dim[a.src]);
    }
    return r;
}

FqRep FqRep::direct_sum(const FqRep& a, const FqRep& b) {
    if (a.graph != b.graph || a.F != b.F)
        throw internal_error("direct_sum: incompatible representations");
    FqRep r = zero(*a.F, *a.graph, a.dim + b.dim);
    for (int h = 0; h < a.graph->arrow_count(); ++h) {
        Arrow ar = a.graph->arrow(h);
        const FMatrix& ma = a.mats[h];
        const FMatrix& mb = b.mats[h];
        FMatrix& m = r.mats[h];
        for (int i = 0; i < ma.rows(); ++i)
            for (int j = 0; j < ma.cols(); ++j) m.at(i, j) = ma.at(i, j);
        int ro = a.dim[ar.dst], co = a.dim[ar.src];
        for (int i = 0; i < mb.rows(); ++i)
            for (int j = 0; j < mb.cols(); ++j) m.at(ro + i, co + j) = mb.at(i, j);
    }
    return r;
}

int hom_dim(const FqRep& M, const FqRep& N) {
    if (M.graph != N.graph || M.F != N.F) throw internal_error("hom_dim: incompatible reps");
    const Gf& F = *M.F;
    const DynkinGraph& g = *M.graph;
    int n = g.rank();

    // Unknowns: phi_i in Hom(M_i, N_i), entries flattened vertex by vertex.
    std::vector<int> offset(n + 1, 0);
    for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + M.dim[i] * N.dim[i];
    int vars = offset[n];
    if (vars == 0) return 0;

    int eq_count = 0;
    for (int h = 0; h < g.arrow_count(); ++h) {
        Arrow a = g.arrow(h);
        if (M.mats[h].is_zero() && N.mats[h].is_zero()) continue;
        eq_count += N.dim[a.dst] * M.dim[a.src];
    }
    if (eq_count == 0) return vars;

    // Equations: for each arrow h, phi_{h''} M_h - N_h phi_{h'} = 0.
    // phi_i has shape N.dim[i] x M.dim[i]; variable (i, r, c) sits at
    // offset[i] + r * M.dim[i] + c.
    FMatrix sys(F, eq_count, vars);
    int row = 0;
    for (int h = 0; h < g.arrow_count(); ++h) {
        Arrow a = g.arrow(h);
        if (M.mats[h].is_zero() && N.mats[h].is_zero()) continue;
        for (int r = 0; r < N.dim[a.dst]; ++r)
            for (int c = 0; c < M.dim[a.src]; ++c) {
                // (phi_{dst} M_h)[r,c] = sum_k phi_dst[r,k] M_h[k,c]
                for (int k = 0; k < M.dim[a.dst]; ++k) {
                    int var = offset[a.dst] + r * M.dim[a.dst] + k;
                    sys.at(row, var) = F.add(sys.at(row, var), M.mats[h].at(k, c));
                }
                // -(N_h phi_{src})[r,c] = -sum_k N_h[r,k] phi_src[k,c]
                for (int k = 0; k < N.dim[a.src]; ++k) {
                    int var = offset[a.src] + k * M.dim[a.src] + c;
                    sys.at(row, var) = F.sub(sys.at(row, var), N.mats[h].at(r, k));
                }
                ++row;
            }
    }
    return vars - sys.rank();
}

int end_dim(const FqRep& M) { return hom_dim(M, M); }

bool moment_map_vanishes(const FqRep& x) {
    const DynkinGraph& g = *x.graph;
    for (int i = 0; i < g.rank(); ++i) {
        FMatrix acc(*x.F, x.dim[i], x.dim[i]);
        for (int h = 0; h < g.arrow_count(); ++h) {
            Arrow a = g.arrow(h);
            if (a.dst != i) continue;
            FMatrix prod = x.mats[h].mul(x.mats[DynkinGraph::opposite(h)]);
            acc = (h % 2 == 0) ? acc.add(prod) : acc.add(prod.negate());
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

namespace {

FMatrix column_space_basis(const FMatrix& m) {
    FMatrix t = m.transpose();
    int r = t.row_reduce();
    FMatrix basis(m.field(), m.rows(), r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.rows(); ++j) basis.at(j, i) = t.at(i, j);
    return basis;
}

} // namespace

bool is_nilpotent(const FqRep& x) {
    const DynkinGraph& g = *x.graph;
    const Gf& F = *x.F;
    // U_0 = V; U_{k+1} = sum_h x_h((U_k)_{h'}); nilpotent iff U_k -> 0.
    std::vector<FMatrix> U;
    for (int i = 0; i < g.rank(); ++i) U.push_back(FMatrix::identity(F, x.dim[i]));
    int total = x.total_dim();
    for (int step = 0; step <= total + 1; ++step) {
        int dim_now = 0;
        for (const auto& u : U) dim_now += u.cols();
        if (dim_now == 0) return true;
        std::vector<FMatrix> next;
        for (int i = 0; i < g.rank(); ++i) {
            FMatrix stacked(F, x.dim[i], 0);
            for (int h = 0; h < g.arrow_count(); ++h) {
                Arrow a = g.arrow(h);
                if (a.dst != i || x.mats[h].is_zero()) continue;
                stacked = stacked.hcat(x.mats[h].mul(U[a.src]));
            }
            next.push_back(column_space_basis(stacked));
        }
        int dim_next = 0;
        for (const auto& u : next) dim_next += u.cols();
        if (dim_next == dim_now) return false; // stabilized above zero
        U = std::move(next);
    }
    return false;
}

RepContext::RepContext(const RootSystem& rs, Orientation om, int q)
    : rs_(&rs), om_(std::move(om)), F_(&Gf::get(q)) {
    if (!rs.finite()) throw input_error("RepContext: finite type required");
    pos_roots_ = rs.positive_roots();
    for (const auto& a : pos_roots_) indec_.emplace(a, build_indecomposable(a));
    int r = (int)pos_roots_.size();
    hom_.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            hom_[i][j] = hom_dim(indec_.at(pos_roots_[i]), indec_.at(pos_roots_[j]));
}

FqRep RepContext::build_indecomposable(const DimVector& root) const {
    // A random point of E_{V,Omega} with End = k is the indecomposable
    // of its dimension (the dense orbit); the scalar-endomorphism test
    // is the certificate, the randomness only drives the search.
    Rng rng(Rng::hash_string(rs_->graph().type_label + "|" + om_.str() + "|" +
                             std::to_string(F_->q()) + "|" + root.str()));
    std::vector<int> support;
    for (int e = 0; e < rs_->graph().edge_count(); ++e) support.push_back(om_.arrow_for_edge(e));
    for (int attempt = 0; attempt < 4096; ++attempt) {
        FqRep cand = random_rep(root, support, rng);
        if (end_dim(cand) == 1) return cand;
    }
    throw internal_error("no indecomposable representative found for " + root.str() + " over F" +
                         std::to_string(F_->q()));
}

FqRep RepContext::random_rep(const DimVector& d, const std::vector<int>& support_arrows,
                             Rng& rng) const {
    FqRep r = FqRep::zero(*F_, rs_->graph(), d);
    for (int h : support_arrows) {
        if (!om_.contains_arrow(h))
            throw internal_error("random_rep: arrow outside the orientation");
        r.mats[h].fill([&] { return rng.next_elem(*F_); });
    }
    return r;
}

const FqRep& RepContext::indecomposable(const DimVector& root) const {
    auto it = indec_.find(root);
    if (it == indec_.end()) throw input_error("not a positive root: " + root.str());
    return it->second;
}

FqRep RepContext::rep_for_label(const RootPartition& label) const {
    FqRep acc = FqRep::zero(*F_, rs_->graph(), rs_->graph().zero_vector());
    for (const auto& part : label.parts) acc = FqRep::direct_sum(acc, indecomposable(part));
    return acc;
}

long long RepContext::hom_between_roots(const DimVector& a, const DimVector& b) const {
    auto ia = std::lower_bound(pos_roots_.begin(), pos_roots_.end(), a) - pos_roots_.begin();
    auto ib = std::lower_bound(pos_roots_.begin(), pos_roots_.end(), b) - pos_roots_.begin();
    if (ia >= (long)pos_roots_.size() || ib >= (long)pos_roots_.size() ||
        pos_roots_[ia] != a || pos_roots_[ib] != b)
        throw input_error("hom_between_roots: not positive roots");
    return hom_[ia][ib];
}

std::vector<int> RepContext::fingerprint(const FqRep& x) const {
    std::vector<int> fp;
    fp.reserve(pos_roots_.size());
    for (const auto& beta : pos_roots_) fp.push_back(hom_dim(indec_.at(beta), x));
    return fp;
}

std::vector<int> RepContext::fingerprint_of_label(const RootPartition& label) const {
    std::vector<int> fp(pos_roots_.size(), 0);
    for (const auto& part : label.parts) {
        auto ip = std::lower_bound(pos_roots_.begin(), pos_roots_.end(), part) -
                  pos_roots_.begin();
        for (size_t b = 0; b < pos_roots_.size(); ++b) fp[b] += hom_[b][ip];
    }
    return fp;
}

const std::vector<RepContext::Candidate>& RepContext::candidates_for(const DimVector& d) const {
    std::lock_guard<std::mutex> lock(cand_mu_);
    auto it = cand_.find(d);
    if (it != cand_.end()) return it->second;
    std::vector<Candidate> cs;
    for (const auto& label : rs_->root_partitions(d))
        cs.push_back({label, fingerprint_of_label(label)});
    return cand_.emplace(d, std::move(cs)).first->second;
}

RootPartition RepContext::identify(const FqRep& x) const {
    const auto& all = candidates_for(x.dim);
    if (all.empty()) throw internal_error("identify: no candidate classes for " + x.dim.str());
    std::vector<const Candidate*> live;
    for (const auto& c : all) live.push_back(&c);
    int r = (int)pos_roots_.size();
    for (int b = 0; b < r && live.size() > 1; ++b) {
        bool splits = false;
        for (size_t t = 1; t < live.size(); ++t)
            if (live[t]->fingerprint[b] != live[0]->fingerprint[b]) { splits = true; break; }
        if (!splits) continue;
        int f = hom_dim(indec_.at(pos_roots_[b]), x);
        std::vector<const Candidate*> next;
        for (const Candidate* c : live)
            if (c->fingerprint[b] == f) next.push_back(c);
        live = std::move(next);
    }
    if (live.size() != 1) throw internal_error("identify: fingerprint matches no class");
    return live[0]->label;
}

std::vector<std::pair<RootPartition, FqRep>> enumerate_reps(const RepContext& ctx,
                                                            const DimVector& d,
                                                            const RepLimits& limits) {
    if (d.height() > limits.max_total_dim)
        throw resource_error("enumerate_reps: total dimension " + std::to_string(d.height()) +
                             " exceeds bound " + std::to_string(limits.max_total_dim));
    if (ctx.field().q() > limits.max_q)
        throw resource_error("enumerate_reps: field size exceeds bound");
    std::vector<std::pair<RootPartition, FqRep>> out;
    for (const auto& label : ctx.roots().root_partitions(d))
        out.emplace_back(label, ctx.rep_for_label(label));
    return out;
}

std::vector<GradedSubspace> graded_subspaces(const Gf& F, const DimVector& d,
                                             const DimVector& a) {
    std::vector<GradedSubspace> out;
    int n = d.size();
    std::vector<std::vector<FMatrix>> per_vertex;
    for (int i = 0; i < n; ++i) {
        if (a[i] < 0 || a[i] > d[i]) return out;
        per_vertex.push_back(all_subspaces(F, d[i], a[i]));
    }
    std::vector<size_t> idx(n, 0);
    while (true) {
        GradedSubspace w;
        w.dim = a;
        for (int i = 0; i < n; ++i) w.rows.push_back(per_vertex[i][idx[i]]);
        out.push_back(std::move(w));
        int i = 0;
        while (i < n && ++idx[i] == per_vertex[i].size()) idx[i++] = 0;
        if (i == n) break;
    }
    return out;
}

bool subspace_is_stable(const FqRep& x, const GradedSubspace& W) {
    const DynkinGraph& g = *x.graph;
    for (int h = 0; h < g.arrow_count(); ++h) {
        Arrow ar = g.arrow(h);
        if (x.mats[h].is_zero()) continue;
        FMatrix img = x.mats[h].mul(W.rows[ar.src].transpose());
        if (img.is_zero()) continue;
        FMatrix base = W.rows[ar.dst].transpose();
        if (!base.spans(img)) return false;
    }
    return true;
}

std::optional<std::pair<FqRep, FqRep>> try_sub_quotient(const FqRep& x,
                                                        const GradedSubspace& W) {
    const DynkinGraph& g = *x.graph;
    const Gf& F = *x.F;
    int n = g.rank();

    // Change of basis per vertex: columns of W first, then unit vectors
    // on the non-pivot coordinates of its RREF rows.
    std::vector<FMatrix> B, Binv;
    for (int i = 0; i < n; ++i) {
        int d = x.dim[i], a = W.dim[i];
        FMatrix basis(F, d, d);
        for (int r = 0; r < a; ++r)
            for (int c = 0; c < d; ++c) basis.at(c, r) = W.rows[i].at(r, c);
        std::vector<bool> pivot(d, false);
        for (int r = 0; r < a; ++r)
            for (int c = 0; c < d; ++c)
                if (W.rows[i].at(r, c) != 0) { pivot[c] = true; break; }
        int col = a;
        for (int c = 0; c < d; ++c)
            if (!pivot[c]) basis.at(c, col++) = 1;
        if (col != d) throw internal_error("sub_quotient: basis completion failed");
        B.push_back(basis);
        Binv.push_back(basis.inverse());
    }

    FqRep sub = FqRep::zero(F, g, W.dim);
    FqRep quot = FqRep::zero(F, g, x.dim - W.dim);
    for (int h = 0; h < g.arrow_count(); ++h) {
        Arrow ar = g.arrow(h);
        if (x.mats[h].is_zero()) continue;
        FMatrix m = Binv[ar.dst].mul(x.mats[h]).mul(B[ar.src]);
        int as = W.dim[ar.src], ad = W.dim[ar.dst];
        // a nonzero lower-left block means x_h leaks out of W
        for (int r = ad; r < x.dim[ar.dst]; ++r)
            for (int c = 0; c < as; ++c)
                if (m.at(r, c) != 0) return std::nullopt;
        for (int r = 0; r < ad; ++r)
            for (int c = 0; c < as; ++c) sub.mats[h].at(r, c) = m.at(r, c);
        for (int r = ad; r < x.dim[ar.dst]; ++r)
            for (int c = as; c < x.dim[ar.src]; ++c)
                quot.mats[h].at(r - ad, c - as) = m.at(r, c);
    }
    return std::make_pair(std::move(sub), std::move(quot));
}

std::pair<FqRep, FqRep> sub_quotient(const FqRep& x, const GradedSubspace& W) {
    auto r = try_sub_quotient(x, W);
    if (!r) throw internal_error("sub_quotient: subspace not stable");
    return *std::move(r);
}

} // namespace qlie
