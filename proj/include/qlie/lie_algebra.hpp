#pragma once

#include <map>
#include <string>
#include <vector>

#include "qlie/cocycle.hpp"
#include "qlie/rational.hpp"
#include "qlie/root_system.hpp"

namespace qlie {

// Basis symbol of a cocycle Lie algebra: a root vector e~_alpha (any
// real root, positive or negative), an imaginary vector alpha_k(n) with
// k in I' and n >= 1, or a Cartan generator h_i.
struct BasisSymbol {
    enum class Kind { real, imaginary, cartan };
    Kind kind = Kind::real;
    DimVector root;  // real only
    int vertex = -1; // imaginary: k; cartan: i
    int level = 0;   // imaginary: n

    static BasisSymbol real_root(DimVector a) {
        BasisSymbol s;
        s.kind = Kind::real;
        s.root = std::move(a);
        return s;
    }
    static BasisSymbol imaginary(int k, int n) {
        BasisSymbol s;
        s.kind = Kind::imaginary;
        s.vertex = k;
        s.level = n;
        return s;
    }
    static BasisSymbol cartan(int i) {
        BasisSymbol s;
        s.kind = Kind::cartan;
        s.vertex = i;
        return s;
    }

    friend bool operator<(const BasisSymbol& a, const BasisSymbol& b) {
        if (a.kind != b.kind) return (int)a.kind < (int)b.kind;
        if (a.kind == Kind::real) return a.root.c < b.root.c;
        if (a.level != b.level) return a.level < b.level;
        return a.vertex < b.vertex;
    }
    friend bool operator==(const BasisSymbol& a, const BasisSymbol& b) {
        return !(a < b) && !(b < a);
    }

    std::string str(const DynkinGraph& g) const;
};

// Finite rational combination of basis symbols; zero coefficients are
// never stored, so equality is plain term-map equality.
class LieElement {
  public:
    LieElement() = default;

    static LieElement single(BasisSymbol s, Rational c = Rational(1)) {
        LieElement e;
        e.add_term(std::move(s), c);
        return e;
    }

    void add_term(BasisSymbol s, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(s);
        if (it == terms_.end()) {
            terms_.emplace(std::move(s), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<BasisSymbol, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LieElement scaled(const Rational& c) const {
        LieElement r;
        if (c.is_zero()) return r;
        for (const auto& [s, v] : terms_) r.terms_.emplace(s, v * c);
        return r;
    }

    friend LieElement operator+(const LieElement& a, const LieElement& b) {
        LieElement r = a;
        for (const auto& [s, v] : b.terms_) r.add_term(s, v);
        return r;
    }
    friend LieElement operator-(const LieElement& a, const LieElement& b) {
        return a + b.scaled(Rational(-1));
    }
    friend bool operator==(const LieElement& a, const LieElement& b) {
        return a.terms_ == b.terms_;
    }

    // Signed sum of "c*e[...]", "c*h<k>(<n>)", "c*H<i>" terms.
    std::string str(const DynkinGraph& g) const;

  private:
    std::map<BasisSymbol, Rational> terms_;
};

// [e~_a, e~_b] = eps(a,b) e~_{a+b} on the positive part of the finite
// cocycle Lie algebra; zero when a+b is not a positive root.
LieElement bracket_finite(const LieElement& x, const LieElement& y, const Cocycle& eps,
                          const RootSystem& rs);

// Affine positive part: real/real brackets may land in the imaginary
// layer (a+b = n delta), and [alpha_k(m), e~_b] = (alpha_k, b) e~_{b+m delta}.
LieElement bracket_affine(const LieElement& x, const LieElement& y, const Cocycle& eps,
                          const RootSystem& rs);

// Full finite cocycle Lie algebra g^eps with explicit structure
// constants: root vectors for all of R plus Cartan generators.
class FullLieAlgebra {
  public:
    FullLieAlgebra(const RootSystem& rs, Cocycle eps);

    const std::vector<BasisSymbol>& basis() const { return basis_; }
    int dim() const { return (int)basis_.size(); }

    LieElement bracket(const BasisSymbol& a, const BasisSymbol& b) const;
    LieElement bracket(const LieElement& x, const LieElement& y) const;

  private:
    const RootSystem* rs_;
    Cocycle eps_;
    std::vector<BasisSymbol> basis_;
};

// (ad e_i)^(1 - i.j)(e_j) == 0, evaluated in the positive part.
bool serre_check(int i, int j, const Cocycle& eps, const RootSystem& rs);

// Iterated bracket [...[e_{k1}, e_{k2}]... e_{kh}] for a presentation of
// a root by simple roots whose partial sums are all roots. Equals
// (prod_{i<j} eps(a_{ki}, a_{kj})) e~_alpha; both routes are computed
// and must agree.
LieElement iterated_root_vector(const std::vector<int>& presentation, const Cocycle& eps,
                                const RootSystem& rs);

// eps(a_k, m delta - a_k) [e~_{a_k}, e~_{m delta - a_k}]; collapses to
// alpha_k(m) exactly.
LieElement ehat(int k, int m, const Cocycle& eps, const RootSystem& rs);

// Basis of the truncated affine positive part: real root vectors with
// root <= cutoff * delta (componentwise) and alpha_k(n), n <= cutoff.
std::vector<BasisSymbol> affine_basis(const RootSystem& rs, int delta_cutoff);

struct JacobiReport {
    bool ok = true;
    std::string failing_triple; // first failure, for the loud error path
    long long triples_checked = 0;
};

// Exhaustive antisymmetry + Jacobi over all basis triples of g^eps.
JacobiReport jacobi_full(const FullLieAlgebra& alg);

// Antisymmetry + Jacobi over affine basis triples whose total grading
// stays below the cutoff, so every intermediate bracket is exact.
JacobiReport jacobi_affine(const RootSystem& rs, const Cocycle& eps, int delta_cutoff);

} // namespace qlie
