#include "qlie/gf.hpp"

#include <map>
#include <mutex>

namespace qlie {

namespace {

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<int>;

int poly_deg(const Poly& f) {
    for (int i = (int)f.size() - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

Poly poly_mod(Poly f, const Poly& m, int p) {
    int dm = poly_deg(m);
    for (int d = poly_deg(f); d >= dm; d = poly_deg(f)) {
        int c = f[d]; // m is monic
        for (int i = 0; i <= dm; ++i) {
            f[d - dm + i] = ((f[d - dm + i] - c * m[i]) % p + p) % p;
        }
    }
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

bool poly_divides(const Poly& d, const Poly& f, int p) {
    return poly_deg(poly_mod(f, d, p)) < 0;
}

Poly index_to_poly(int idx, int p, int k) {
    Poly f(k, 0);
    for (int i = 0; i < k; ++i) {
        f[i] = idx % p;
        idx /= p;
    }
    return f;
}

int poly_to_index(const Poly& f, int p, int k) {
    int idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * p + (i < (int)f.size() ? f[i] : 0);
    return idx;
}

// Smallest monic irreducible of degree k over F_p, by trial division.
Poly find_irreducible(int p, int k) {
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
        Poly f = index_to_poly(low, p, k + 1);
        f.resize(k + 1, 0);
        f[k] = 1;
        bool irred = poly_deg(f) == k && f[0] != 0;
        for (int dd = 1; irred && 2 * dd <= k; ++dd) {
            int dcount = 1;
            for (int i = 0; i < dd; ++i) dcount *= p;
            for (int di = 0; di < dcount && irred; ++di) {
                Poly d = index_to_poly(di, p, dd + 1);
                d.resize(dd + 1, 0);
                d[dd] = 1;
                if (poly_divides(d, f, p)) irred = false;
            }
        }
        if (irred) return f;
    }
    throw internal_error("Gf: no irreducible polynomial found");
}

} // namespace

bool Gf::is_prime_power(int q, int* p_out, int* k_out) {
    if (q < 2) return false;
    for (int p = 2; p <= q; ++p) {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        if (q % p != 0) continue;
        int m = q, k = 0;
        while (m % p == 0) { m /= p; ++k; }
        if (m == 1) {
            if (p_out) *p_out = p;
            if (k_out) *k_out = k;
            return true;
        }
        return false;
    }
    return false;
}

int Gf::next_prime_power(int q) {
    for (int c = q + 1;; ++c)
        if (is_prime_power(c)) return c;
}

Gf::Gf(int q) : q_(q) {
    if (!is_prime_power(q, &p_, &k_) || q > 256)
        throw input_error("Gf: unsupported field size " + std::to_string(q));

    add_.assign((size_t)q_ * q_, 0);
    mul_.assign((size_t)q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    if (k_ == 1) {
        for (int a = 0; a < q_; ++a) {
            neg_[a] = (elem)((q_ - a) % q_);
            for (int b = 0; b < q_; ++b) {
                add_[a * q_ + b] = (elem)((a + b) % q_);
                mul_[a * q_ + b] = (elem)((a * b) % q_);
            }
        }
    } else {
        Poly m = find_irreducible(p_, k_);
        for (int a = 0; a < q_; ++a) {
            Poly fa = index_to_poly(a, p_, k_);
            Poly na(k_, 0);
            for (int i = 0; i < k_; ++i) na[i] = (p_ - fa[i]) % p_;
            neg_[a] = (elem)poly_to_index(na, p_, k_);
            for (int b = 0; b < q_; ++b) {
                Poly fb = index_to_poly(b, p_, k_);
                Poly s(k_, 0);
                for (int i = 0; i < k_; ++i) s[i] = (fa[i] + fb[i]) % p_;
                add_[a * q_ + b] = (elem)poly_to_index(s, p_, k_);
                Poly prod = poly_mod(poly_mul(fa, fb, p_), m, p_);
                prod.resize(k_, 0);
                mul_[a * q_ + b] = (elem)poly_to_index(prod, p_, k_);
            }
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) { inv_[a] = (elem)b; break; }
}

const Gf& Gf::get(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Gf>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, std::unique_ptr<Gf>(new Gf(q))).first;
    return *it->second;
}

} // namespace qlie
