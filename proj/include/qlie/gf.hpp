#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qlie/error.hpp"

namespace qlie {

// Small finite field GF(p^k), q <= 256, with full operation tables.
// Elements are indices 0..q-1; for k > 1 the index is read base p as the
// coefficient vector of a polynomial reduced mod a fixed irreducible.
class Gf {
  public:
    using elem = std::uint16_t;

    static const Gf& get(int q);

    static bool is_prime_power(int q, int* p_out = nullptr, int* k_out = nullptr);
    static int next_prime_power(int q); // smallest prime power > q

    int q() const { return q_; }
    int p() const { return p_; }
    int k() const { return k_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }

    elem add(elem a, elem b) const { return add_[a * q_ + b]; }
    elem sub(elem a, elem b) const { return add_[a * q_ + neg_[b]]; }
    elem neg(elem a) const { return neg_[a]; }
    elem mul(elem a, elem b) const { return mul_[a * q_ + b]; }
    elem inv(elem a) const {
        if (a == 0) throw internal_error("Gf: inverse of zero");
        return inv_[a];
    }
    elem div(elem a, elem b) const { return mul(a, inv(b)); }

    // Deterministic embedding of an integer, used when seeding matrices.
    elem from_int(long long v) const {
        long long r = v % q_;
        if (r < 0) r += q_;
        return (elem)r;
    }

  private:
    explicit Gf(int q);

    int q_ = 0, p_ = 0, k_ = 0;
    std::vector<elem> add_, mul_, neg_, inv_;
};

} // namespace qlie
