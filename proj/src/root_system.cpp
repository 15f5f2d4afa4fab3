#include "qlie/root_system.hpp"

#include <algorithm>
#include <functional>

namespace qlie {

RootPartition::RootPartition(std::vector<DimVector> p, int rank) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end());
    total = DimVector(rank);
    for (const auto& part : parts) total = total + part;
}

std::string RootPartition::str() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ';';
        s += parts[i].str();
    }
    return s;
}

RootPartition RootPartition::parse(const std::string& s, int rank) {
    std::vector<DimVector> parts;
    std::string cur;
    for (char ch : s + ";") {
        if (ch == ';') {
            if (!cur.empty()) parts.push_back(DimVector::parse(cur, rank));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return RootPartition(std::move(parts), rank);
}

RootSystem::RootSystem(DynkinGraph g) : graph_(std::move(g)) {
    if (finite()) {
        enumerate_finite();
    } else {
        compute_delta();
        // Root system of the finite subdiagram I' embedded in Z[I].
        DynkinGraph sub = graph_;
        // Reflection closure only ever moves within I', so it is enough
        // to drop edges at the extending vertex and seed with I' simples.
        sub.edges.clear();
        for (const auto& e : graph_.edges)
            if (e.first != graph_.extending_vertex && e.second != graph_.extending_vertex)
                sub.edges.push_back(e);
        std::set<DimVector> seen;
        std::vector<DimVector> frontier;
        for (int i = 0; i < rank(); ++i) {
            if (i == graph_.extending_vertex) continue;
            DimVector s = graph_.simple_root(i);
            seen.insert(s);
            frontier.push_back(s);
        }
        while (!frontier.empty()) {
            std::vector<DimVector> next;
            for (const auto& v : frontier) {
                for (int i = 0; i < rank(); ++i) {
                    if (i == graph_.extending_vertex) continue;
                    long long p = 0;
                    for (int j = 0; j < rank(); ++j) p += (long long)sub.simple_pairing(i, j) * v[j];
                    DimVector w = v;
                    w[i] -= (int)p;
                    if (w.nonnegative() && !seen.count(w)) {
                        seen.insert(w);
                        next.push_back(w);
                    }
                }
            }
            frontier = std::move(next);
        }
        finite_sub_pos_.assign(seen.begin(), seen.end());
        finite_sub_set_ = std::move(seen);
    }
}

void RootSystem::enumerate_finite() {
    std::set<DimVector> seen;
    std::vector<DimVector> frontier;
    for (int i = 0; i < rank(); ++i) {
        seen.insert(graph_.simple_root(i));
        frontier.push_back(graph_.simple_root(i));
    }
    while (!frontier.empty()) {
        std::vector<DimVector> next;
        for (const auto& v : frontier) {
            for (int i = 0; i < rank(); ++i) {
                DimVector w = v;
                w[i] -= (int)pairing(v, graph_.simple_root(i));
                if (w.nonnegative() && !seen.count(w)) {
                    seen.insert(w);
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    finite_pos_.assign(seen.begin(), seen.end());
    finite_pos_set_ = std::move(seen);
}

void RootSystem::compute_delta() {
    // delta is the primitive positive integer vector in the kernel of
    // the affine Cartan matrix; search by height (marks are small).
    int n = rank();
    for (int h = n; h <= 6 * n; ++h) {
        std::vector<int> v(n, 1);
        // enumerate compositions: coords in 1..6 summing to h
        std::function<bool(int, int)> rec = [&](int idx, int remaining) -> bool {
            if (idx == n) {
                if (remaining != 0) return false;
                DimVector d;
                d.c = v;
                for (int i = 0; i < n; ++i)
                    if (pairing(d, graph_.simple_root(i)) != 0) return false;
                delta_ = d;
                return true;
            }
            for (int val = 1; val <= 6 && val <= remaining - (n - idx - 1); ++val) {
                v[idx] = val;
                if (rec(idx + 1, remaining - val)) return true;
            }
            return false;
        };
        if (rec(0, h)) {
            if (delta_[graph_.extending_vertex] != 1)
                throw internal_error("extending vertex mark is not 1");
            return;
        }
    }
    throw internal_error("delta not found for " + graph_.type_label);
}

long long RootSystem::pairing(const DimVector& a, const DimVector& b) const {
    long long s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank(); ++j)
            if (b[j] != 0) s += (long long)a[i] * b[j] * graph_.simple_pairing(i, j);
    }
    return s;
}

std::vector<DimVector> RootSystem::positive_roots(std::optional<int> height_cutoff) const {
    if (finite()) return finite_pos_;
    if (!height_cutoff)
        throw input_error("affine root enumeration requires a height cutoff");
    int cutoff = *height_cutoff;
    std::vector<DimVector> out;
    int dh = delta_.height();
    for (const auto& beta : finite_sub_pos_) {
        for (int n = 0; beta.height() + n * dh < cutoff; ++n)
            out.push_back(beta + delta_.scaled(n));
        for (int n = 1; n * dh - beta.height() < cutoff; ++n)
            out.push_back(delta_.scaled(n) - beta);
    }
    for (int n = 1; n * dh < cutoff; ++n) out.push_back(delta_.scaled(n));
    std::sort(out.begin(), out.end());
    return out;
}

bool RootSystem::is_positive_root(const DimVector& a) const {
    if (finite()) return finite_pos_set_.count(a) > 0;
    if (!a.nonnegative() || a.is_zero()) return false;
    int n = a[graph_.extending_vertex]; // delta has mark 1 at p
    DimVector beta = a - delta_.scaled(n);
    if (beta.is_zero()) return n >= 1;
    if (finite_sub_set_.count(beta)) return true;
    if (n >= 1 && finite_sub_set_.count(beta.negated())) return true;
    return false;
}

bool RootSystem::is_real_root(const DimVector& a) const {
    return is_positive_root(a) && pairing(a, a) == 2;
}

DimVector RootSystem::highest_root() const {
    if (!finite()) throw input_error("highest root requires finite type");
    return finite_pos_.back(); // canonical order ends at maximal height
}

DimVector RootSystem::delta() const {
    if (finite()) throw input_error("delta requires affine type");
    return delta_;
}

DimVector RootSystem::imaginary_class(const DimVector& a) const {
    if (finite()) throw input_error("imaginary class requires affine type");
    return a - delta_.scaled(a[graph_.extending_vertex]);
}

std::vector<int> RootSystem::finite_vertices() const {
    if (finite()) throw input_error("finite_vertices requires affine type");
    std::vector<int> out;
    for (int i = 0; i < rank(); ++i)
        if (i != graph_.extending_vertex) out.push_back(i);
    return out;
}

const std::vector<DimVector>& RootSystem::finite_subsystem_roots() const {
    if (finite()) throw input_error("finite_subsystem_roots requires affine type");
    return finite_sub_pos_;
}

std::vector<RootPartition> RootSystem::root_partitions(const DimVector& a) const {
    if (!finite()) throw input_error("root partitions require finite type");
    if (!a.nonnegative()) throw input_error("root partitions require a nonnegative vector");

    std::vector<RootPartition> out;
    std::vector<DimVector> stack;
    // Parts are picked non-increasing in the canonical root order, so
    // each multiset appears exactly once.
    std::function<void(const DimVector&, int)> rec = [&](const DimVector& remaining, int max_idx) {
        if (remaining.is_zero()) {
            out.emplace_back(stack, rank());
            return;
        }
        for (int i = max_idx; i >= 0; --i) {
            const DimVector& r = finite_pos_[i];
            if (!leq(r, remaining)) continue;
            stack.push_back(r);
            rec(remaining - r, i);
            stack.pop_back();
        }
    };
    rec(a, (int)finite_pos_.size() - 1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qlie
