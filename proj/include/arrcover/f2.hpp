// Linear algebra over F2 with packed bit rows: rank, kernel, solve.
#pragma once

#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "arrcover/int_matrix.hpp"

namespace arrcover {

struct F2Vector {
  std::size_t n = 0;
  std::vector<std::uint64_t> w;

  F2Vector() = default;
  explicit F2Vector(std::size_t size) : n(size), w((size + 63) / 64) {}

  bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v)
      w[i >> 6] |= mask;
    else
      w[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { w[i >> 6] ^= std::uint64_t(1) << (i & 63); }
  void operator^=(const F2Vector& o) {
    assert(n == o.n);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
  }
  bool is_zero() const {
    for (std::uint64_t x : w)
      if (x) return false;
    return true;
  }
  bool operator==(const F2Vector& o) const { return n == o.n && w == o.w; }
};

class F2Matrix {
 public:
  F2Matrix() : rows_(0), cols_(0) {}
  F2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_(rows, F2Vector(cols)) {}

  static F2Matrix from(const IntMatrix& m) {
    F2Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (mpz_odd_p(m.at(i, j).get_mpz_t())) r.set(i, j, true);
    return r;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t i, std::size_t j) const { return row_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { row_[i].set(j, v); }
  const F2Vector& row(std::size_t i) const { return row_[i]; }

  F2Vector apply(const F2Vector& x) const {
    assert(x.n == cols_);
    F2Vector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::size_t bits = 0;
      for (std::size_t k = 0; k < row_[i].w.size(); ++k)
        bits += __builtin_popcountll(row_[i].w[k] & x.w[k]);
      y.set(i, bits & 1u);
    }
    return y;
  }

  std::size_t rank() const {
    F2Matrix a(*this);
    return a.rank_destructive();
  }

  // Basis of the null space {x : M x = 0}.
  std::vector<F2Vector> kernel_basis() const {
    F2Matrix a(*this);
    std::vector<int> pivot_of_col(cols_, -1);
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols_ && r < rows_; ++j) {
      std::size_t p = r;
      while (p < rows_ && !a.get(p, j)) ++p;
      if (p == rows_) continue;
      std::swap(a.row_[r], a.row_[p]);
      for (std::size_t i = 0; i < rows_; ++i)
        if (i != r && a.get(i, j)) a.row_[i] ^= a.row_[r];
      pivot_of_col[j] = static_cast<int>(r);
      ++r;
    }
    std::vector<F2Vector> basis;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (pivot_of_col[j] >= 0) continue;
      F2Vector v(cols_);
      v.set(j, true);
      for (std::size_t jj = 0; jj < cols_; ++jj)
        if (pivot_of_col[jj] >= 0 && a.get(static_cast<std::size_t>(pivot_of_col[jj]), j))
          v.set(jj, true);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t rank_destructive() {
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols_ && r < rows_; ++j) {
      std::size_t p = r;
      while (p < rows_ && !get(p, j)) ++p;
      if (p == rows_) continue;
      std::swap(row_[r], row_[p]);
      for (std::size_t i = r + 1; i < rows_; ++i)
        if (get(i, j)) row_[i] ^= row_[r];
      ++r;
    }
    return r;
  }

  std::size_t rows_, cols_;
  std::vector<F2Vector> row_;
};

inline std::size_t rank_mod2(const IntMatrix& m) { return F2Matrix::from(m).rank(); }

inline std::vector<F2Vector> kernel_f2(const F2Matrix& m) { return m.kernel_basis(); }

}  // namespace arrcover
