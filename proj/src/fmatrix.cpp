#include "qlie/fmatrix.hpp"

namespace qlie {

namespace {

void enumerate_pivots(int d, int a, int start, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == a) {
        out.push_back(cur);
        return;
    }
    for (int c = start; c <= d - (a - (int)cur.size()); ++c) {
        cur.push_back(c);
        enumerate_pivots(d, a, c + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<FMatrix> all_subspaces(const Gf& F, int d, int a) {
    std::vector<FMatrix> out;
    if (a < 0 || a > d) return out;
    if (a == 0) {
        out.emplace_back(F, 0, d);
        return out;
    }
    std::vector<std::vector<int>> pivot_sets;
    std::vector<int> cur;
    enumerate_pivots(d, a, 0, cur, pivot_sets);

    for (const auto& piv : pivot_sets) {
        std::vector<bool> is_piv(d, false);
        for (int c : piv) is_piv[c] = true;
        // Free slots: (row i, col j) with j > piv[i] and j not a pivot.
        std::vector<std::pair<int, int>> free_slots;
        for (int i = 0; i < a; ++i)
            for (int j = piv[i] + 1; j < d; ++j)
                if (!is_piv[j]) free_slots.emplace_back(i, j);

        long long total = 1;
        for (size_t i = 0; i < free_slots.size(); ++i) total *= F.q();
        for (long long code = 0; code < total; ++code) {
            FMatrix m(F, a, d);
            for (int i = 0; i < a; ++i) m.at(i, piv[i]) = 1;
            long long c = code;
            for (const auto& [r, col] : free_slots) {
                m.at(r, col) = (Gf::elem)(c % F.q());
                c /= F.q();
            }
            out.push_back(std::move(m));
        }
    }
    return out;
}

long long gaussian_binomial(int d, int a, long long q) {
    if (a < 0 || a > d) return 0;
    // [d a]_q = prod_{i=0}^{a-1} (q^(d-i)-1)/(q^(i+1)-1)
    long long num = 1, den = 1;
    auto qpow = [&](int e) {
        long long r = 1;
        for (int i = 0; i < e; ++i) r *= q;
        return r;
    };
    for (int i = 0; i < a; ++i) {
        num *= qpow(d - i) - 1;
        den *= qpow(i + 1) - 1;
    }
    return num / den;
}

} // namespace qlie
