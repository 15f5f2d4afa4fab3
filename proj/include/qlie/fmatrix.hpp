#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qlie/error.hpp"
#include "qlie/gf.hpp"

namespace qlie {

// Dense matrix over a small finite field. Vectors are columns; a map
// V -> W of graded pieces with dim V = c, dim W = r is an r x c matrix.
class FMatrix {
  public:
    FMatrix() = default;
    FMatrix(const Gf& F, int rows, int cols)
        : F_(&F), rows_(rows), cols_(cols), a_((size_t)rows * cols, 0) {}

    static FMatrix identity(const Gf& F, int n) {
        FMatrix m(F, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    const Gf& field() const { return *F_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Gf::elem& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
    Gf::elem at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }

    bool is_zero() const {
        for (auto v : a_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const FMatrix& x, const FMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    FMatrix mul(const FMatrix& o) const {
        if (cols_ != o.rows_) throw internal_error("FMatrix: shape mismatch in mul");
        FMatrix r(*F_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                Gf::elem v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) = F_->add(r.at(i, j), F_->mul(v, o.at(k, j)));
            }
        return r;
    }

    FMatrix add(const FMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("FMatrix: shape mismatch in add");
        FMatrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(r.a_[i], o.a_[i]);
        return r;
    }

    FMatrix negate() const {
        FMatrix r = *this;
        for (auto& v : r.a_) v = F_->neg(v);
        return r;
    }

    FMatrix transpose() const {
        FMatrix r(*F_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // Horizontal concatenation [this | o].
    FMatrix hcat(const FMatrix& o) const {
        if (rows_ != o.rows_) throw internal_error("FMatrix: shape mismatch in hcat");
        FMatrix r(*F_, rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    int rank() const {
        FMatrix m = *this;
        return m.row_reduce();
    }

    // In-place reduction to RREF; returns rank.
    int row_reduce() {
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int piv = -1;
            for (int r = rank; r < rows_; ++r)
                if (at(r, col) != 0) { piv = r; break; }
            if (piv < 0) continue;
            if (piv != rank)
                for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(rank, j));
            Gf::elem s = F_->inv(at(rank, col));
            for (int j = 0; j < cols_; ++j) at(rank, j) = F_->mul(at(rank, j), s);
            for (int r = 0; r < rows_; ++r) {
                if (r == rank) continue;
                Gf::elem f = at(r, col);
                if (f == 0) continue;
                for (int j = 0; j < cols_; ++j)
                    at(r, j) = F_->sub(at(r, j), F_->mul(f, at(rank, j)));
            }
            ++rank;
        }
        return rank;
    }

    int nullity() const { return cols_ - rank(); }

    FMatrix inverse() const {
        if (rows_ != cols_) throw internal_error("FMatrix: inverse of non-square");
        FMatrix aug = hcat(identity(*F_, rows_));
        if (aug.row_reduce() != rows_) throw internal_error("FMatrix: singular matrix");
        FMatrix inv(*F_, rows_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, rows_ + j);
        return inv;
    }

    // Columns of `vecs` lie in the column space of this matrix?
    bool spans(const FMatrix& vecs) const {
        int base = rank();
        return hcat(vecs).rank() == base;
    }

    void fill(const std::function<Gf::elem()>& gen) {
        for (auto& v : a_) v = gen();
    }

  private:
    const Gf* F_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<Gf::elem> a_;
};

// All a-dimensional subspaces of F^d, each as the RREF row-basis (a x d).
// Enumeration order is deterministic: pivot columns lexicographic, then
// free entries counted in base q.
std::vector<FMatrix> all_subspaces(const Gf& F, int d, int a);

// Gaussian binomial [d choose a]_q as a plain integer (small inputs).
long long gaussian_binomial(int d, int a, long long q);

} // namespace qlie
