// Dense matrices over arbitrary-precision integers. Largest complexes handled
// here are a few hundred cells, so no sparsity machinery in the public type.
#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "arrcover/rational.hpp"

namespace arrcover {

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return e_[i * cols_ + j];
  }
  const Integer& at(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return e_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const Integer& x : e_)
      if (x != 0) return false;
    return true;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    assert(cols_ == o.rows_);
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Integer& x = at(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Integer& y = o.at(k, j);
          if (y != 0) r.at(i, j) += x * y;
        }
      }
    return r;
  }

  IntMatrix transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // Bareiss fraction-free elimination; exact determinant of a square matrix.
  Integer determinant() const {
    assert(rows_ == cols_);
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a(*this);
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a.at(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && a.at(p, k) == 0) ++p;
        if (p == n) return 0;
        for (std::size_t j = 0; j < n; ++j) swap(a.at(k, j), a.at(p, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          Integer t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
          mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
      prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Integer> e_;
};

}  // namespace arrcover
