// Smith normal form over Z.
//
// Two entry points:
//   smith_normal_form  - dense reduction, optionally accumulating a unimodular
//                        certificate U * M * V = diag(d1..dr) together with
//                        V^-1 (needed to rebase chain maps onto kernel bases).
//   invariant_factors  - fast path used by the omega scans: sparse elimination
//                        of +-1 pivots over int64 (overflow-checked, falling
//                        back to big integers), then dense SNF of the residual
//                        core. Exact in all cases.
//
// Pivoting picks a nonzero entry of least absolute value to limit coefficient
// growth; intermediate entries can exceed machine words even on desk-scale
// inputs, hence arbitrary precision throughout the dense path.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "arrcover/int_matrix.hpp"

namespace arrcover {

struct SmithForm {
  std::vector<Integer> invariant_factors;  // d1 | d2 | ... | dr, all positive
  bool has_certificate = false;
  IntMatrix U, V, Vinv;  // U*M*V = diag(invariant_factors), V*Vinv = I
};

namespace detail {

// q = a/b rounded to nearest (ties toward zero); minimizes |a - q b|.
inline Integer round_quotient(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer two_r = 2 * abs(r);
  if (cmp(two_r, abs(b)) > 0) {
    if ((sign_of(r) < 0) == (sign_of(b) < 0))
      ++q;
    else
      --q;
  }
  return q;
}

class DenseSmith {
 public:
  DenseSmith(const IntMatrix& m, bool cert) : a_(m), cert_(cert) {
    if (cert_) {
      u_ = IntMatrix::identity(m.rows());
      v_ = IntMatrix::identity(m.cols());
      vinv_ = IntMatrix::identity(m.cols());
    }
  }

  SmithForm run() {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
      if (!move_min_pivot(t)) break;
      clear_row_col(t);
      enforce_divisibility(t);
      ++t;
    }
    SmithForm out;
    for (std::size_t k = 0; k < t; ++k) {
      if (sign_of(a_.at(k, k)) < 0) negate_row(k);
      out.invariant_factors.push_back(a_.at(k, k));
    }
    if (cert_) {
      out.has_certificate = true;
      out.U = std::move(u_);
      out.V = std::move(v_);
      out.Vinv = std::move(vinv_);
    }
    return out;
  }

 private:
  bool move_min_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const Integer& x = a_.at(i, j);
        if (x == 0) continue;
        Integer ax = abs(x);
        if (!found || cmp(ax, best) < 0) {
          best = ax;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void clear_row_col(std::size_t t) {
    for (;;) {
      bool col_dirty = false;
      for (std::size_t i = 0; i < a_.rows(); ++i) {
        if (i == t || a_.at(i, t) == 0) continue;
        Integer q = round_quotient(a_.at(i, t), a_.at(t, t));
        if (q != 0) add_row(i, t, -q);
        if (a_.at(i, t) != 0) {
          // remainder strictly smaller than pivot: promote it
          swap_rows(t, i);
          col_dirty = true;
        }
      }
      if (col_dirty) continue;
      bool row_dirty = false;
      for (std::size_t j = 0; j < a_.cols(); ++j) {
        if (j == t || a_.at(t, j) == 0) continue;
        Integer q = round_quotient(a_.at(t, j), a_.at(t, t));
        if (q != 0) add_col(j, t, -q);
        if (a_.at(t, j) != 0) {
          swap_cols(t, j);
          row_dirty = true;
        }
      }
      if (!row_dirty) {
        // column may have been refilled by column ops only if row ops ran;
        // re-scan to be safe
        bool clean = true;
        for (std::size_t i = 0; i < a_.rows(); ++i)
          if (i != t && a_.at(i, t) != 0) clean = false;
        if (clean) return;
      }
    }
  }

  void enforce_divisibility(std::size_t t) {
    for (;;) {
      const Integer& d = a_.at(t, t);
      bool ok = true;
      for (std::size_t i = t + 1; i < a_.rows() && ok; ++i)
        for (std::size_t j = t + 1; j < a_.cols() && ok; ++j)
          if (!mpz_divisible_p(a_.at(i, j).get_mpz_t(), d.get_mpz_t())) {
            add_row(t, i, Integer(1));  // pull the offending row up
            ok = false;
          }
      if (ok) return;
      clear_row_col(t);
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) swap(a_.at(i, j), a_.at(k, j));
    if (cert_)
      for (std::size_t j = 0; j < u_.cols(); ++j) swap(u_.at(i, j), u_.at(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) swap(a_.at(i, j), a_.at(i, k));
    if (cert_) {
      for (std::size_t i = 0; i < v_.rows(); ++i) swap(v_.at(i, j), v_.at(i, k));
      for (std::size_t c = 0; c < vinv_.cols(); ++c) swap(vinv_.at(j, c), vinv_.at(k, c));
    }
  }
  // row_i += q * row_k
  void add_row(std::size_t i, std::size_t k, const Integer& q) {
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (a_.at(k, j) != 0) a_.at(i, j) += q * a_.at(k, j);
    if (cert_)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (u_.at(k, j) != 0) u_.at(i, j) += q * u_.at(k, j);
  }
  // col_j += q * col_k
  void add_col(std::size_t j, std::size_t k, const Integer& q) {
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (a_.at(i, k) != 0) a_.at(i, j) += q * a_.at(i, k);
    if (cert_) {
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (v_.at(i, k) != 0) v_.at(i, j) += q * v_.at(i, k);
      // (V E)^-1 = E^-1 V^-1 with E^-1 adding -q of row j to row k
      for (std::size_t c = 0; c < vinv_.cols(); ++c)
        if (vinv_.at(j, c) != 0) vinv_.at(k, c) -= q * vinv_.at(j, c);
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_.at(i, j) = -a_.at(i, j);
    if (cert_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_.at(i, j) = -u_.at(i, j);
  }

  IntMatrix a_;
  bool cert_;
  IntMatrix u_, v_, vinv_;
};

struct Int64Overflow {};

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Int64Overflow{};
  return r;
}
inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Int64Overflow{};
  return r;
}

// Sparse elimination of unit pivots. Rows are column-sorted vectors; a lazy
// per-column row index with exact nnz counters drives Markowitz-style pivot
// selection (least fill). Returns the number of unit invariant factors peeled
// off and leaves the residual core entries in `core`.
template <typename Value, typename MulAdd>
std::size_t unit_sweep(std::vector<std::vector<std::pair<int, Value>>>& row, int ncols,
                       MulAdd mul_add,
                       std::vector<std::pair<std::pair<int, int>, Value>>* core) {
  const int nrows = static_cast<int>(row.size());
  std::vector<int> row_nnz(nrows, 0), col_nnz(ncols, 0);
  std::vector<std::vector<int>> col_rows(ncols);  // may hold stale row ids
  for (int i = 0; i < nrows; ++i) {
    row_nnz[i] = static_cast<int>(row[i].size());
    for (const auto& [j, v] : row[i]) {
      col_rows[j].push_back(i);
      ++col_nnz[j];
    }
  }
  std::vector<char> row_alive(nrows, 1);
  std::vector<std::pair<int, Value>> merged;
  std::size_t units = 0;

  auto find_in_row = [](const std::vector<std::pair<int, Value>>& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const std::pair<int, Value>& e, int c) { return e.first < c; });
    return (it != r.end() && it->first == col) ? it : r.end();
  };

  for (;;) {
    long best = -1;
    int pr = -1, pc = -1;
    for (int i = 0; i < nrows && best != 0; ++i) {
      if (!row_alive[i]) continue;
      for (const auto& [j, v] : row[i]) {
        if (v != 1 && v != -1) continue;
        long fill = static_cast<long>(row_nnz[i] - 1) * (col_nnz[j] - 1);
        if (best < 0 || fill < best) {
          best = fill;
          pr = i;
          pc = j;
          if (best == 0) break;
        }
      }
    }
    if (pr < 0) break;

    const Value pivot = find_in_row(row[pr], pc)->second;
    std::vector<int> touched;
    touched.swap(col_rows[pc]);
    for (int i : touched) {
      if (i == pr || !row_alive[i]) continue;
      auto hit = find_in_row(row[i], pc);
      if (hit == row[i].end()) continue;  // stale index entry
      // row_i -= factor * pivot * row_pr clears row_i[pc]; pivot is +-1
      Value scale = mul_add(Value(0), pivot == 1 ? Value(-1) : Value(1), hit->second);
      merged.clear();
      auto a = row[i].begin(), ae = row[i].end();
      auto b = row[pr].begin(), be = row[pr].end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
          Value nv = mul_add(Value(0), scale, b->second);
          if (nv != 0) {
            merged.emplace_back(b->first, std::move(nv));
            col_rows[b->first].push_back(i);
            ++col_nnz[b->first];
          }
          ++b;
        } else {
          Value nv = mul_add(a->second, scale, b->second);
          if (nv != 0)
            merged.emplace_back(a->first, std::move(nv));
          else
            --col_nnz[a->first];
          ++a;
          ++b;
        }
      }
      row[i].swap(merged);
      row_nnz[i] = static_cast<int>(row[i].size());
    }
    for (const auto& [j, v] : row[pr]) --col_nnz[j];
    row_alive[pr] = 0;
    row[pr].clear();
    ++units;
  }

  if (core) {
    for (int i = 0; i < nrows; ++i) {
      if (!row_alive[i]) continue;
      for (const auto& [j, v] : row[i]) core->push_back({{i, j}, v});
    }
  }
  return units;
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& m, bool with_certificate = false) {
  return detail::DenseSmith(m, with_certificate).run();
}

// Invariant factors only, via the sparse fast path. Same result as
// smith_normal_form(m).invariant_factors.
inline std::vector<Integer> invariant_factors(const IntMatrix& m) {
  const int nrows = static_cast<int>(m.rows()), ncols = static_cast<int>(m.cols());
  std::vector<Integer> factors;
  std::size_t units = 0;
  std::vector<std::pair<std::pair<int, int>, Integer>> core_entries;

  bool int64_ok = true;
  try {
    std::vector<std::vector<std::pair<int, std::int64_t>>> row(nrows);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) {
        const Integer& x = m.at(i, j);
        if (x == 0) continue;
        if (!x.fits_slong_p()) throw detail::Int64Overflow{};
        row[i].emplace_back(j, x.get_si());
      }
    std::vector<std::pair<std::pair<int, int>, std::int64_t>> core64;
    units = detail::unit_sweep(
        row, ncols,
        [](std::int64_t acc, std::int64_t s, std::int64_t v) {
          return detail::checked_add(acc, detail::checked_mul(s, v));
        },
        &core64);
    for (auto& e : core64) core_entries.push_back({e.first, Integer(static_cast<long>(e.second))});
  } catch (detail::Int64Overflow&) {
    int64_ok = false;
  }

  if (!int64_ok) {
    core_entries.clear();
    std::vector<std::vector<std::pair<int, Integer>>> row(nrows);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j)
        if (m.at(i, j) != 0) row[i].emplace_back(j, m.at(i, j));
    units = detail::unit_sweep(
        row, ncols,
        [](const Integer& acc, const Integer& s, const Integer& v) { return Integer(acc + s * v); },
        &core_entries);
  }

  for (std::size_t k = 0; k < units; ++k) factors.push_back(1);
  if (!core_entries.empty()) {
    // compact the residual core into a small dense matrix
    std::map<int, int> rmap, cmap;
    for (const auto& e : core_entries) {
      rmap.emplace(e.first.first, 0);
      cmap.emplace(e.first.second, 0);
    }
    int ri = 0, ci = 0;
    for (auto& [k, v] : rmap) v = ri++;
    for (auto& [k, v] : cmap) v = ci++;
    IntMatrix core(rmap.size(), cmap.size());
    for (const auto& e : core_entries) core.at(rmap[e.first.first], cmap[e.first.second]) = e.second;
    for (const Integer& d : smith_normal_form(core).invariant_factors) factors.push_back(d);
  }
  return factors;
}

inline std::size_t rank_over_z(const IntMatrix& m) { return invariant_factors(m).size(); }

}  // namespace arrcover
