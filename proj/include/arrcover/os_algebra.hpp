// The Orlik-Solomon algebra of the complement over F2 in degrees 0..2, and
// the mod 2 Aomoto complex (H^*(X, Z_2), omega ^).
//
// Degree-2 basis: for each intersection point p with incident lines
// i(p) = i_1 < i_2 < ... < i_m, the products e_{i(p)} e_j for the other
// incident j. Reduction of an arbitrary pair: parallel lines multiply to 0;
// for i < j through p with i != i(p),
//   e_i e_j = e_{i(p)} e_j + e_{i(p)} e_i   (boundary relation mod 2).
#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arrcover/f2.hpp"
#include "arrcover/geometry.hpp"
#include "arrcover/omega.hpp"

namespace arrcover {

class OSAlgebraF2 {
 public:
  explicit OSAlgebraF2(const Arrangement& arr) : OSAlgebraF2(arr, intersection_data(arr)) {}

  OSAlgebraF2(const Arrangement& arr, IntersectionData idata)
      : n_(arr.size()), idata_(std::move(idata)) {
    for (std::size_t p = 0; p < idata_.points.size(); ++p) {
      const auto& lines = idata_.points[p].lines;
      for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = a + 1; b < lines.size(); ++b)
          point_of_pair_[{lines[a], lines[b]}] = static_cast<int>(p);
      for (std::size_t b = 1; b < lines.size(); ++b)
        basis_id_[{lines[0], lines[b]}] = dim2_++;
    }
  }

  std::size_t lines() const { return n_; }
  std::size_t dim_deg2() const { return dim2_; }  // equals b_2 of the complement
  const IntersectionData& intersections() const { return idata_; }

  // reduction of e_i e_j (0-based i, j) into the degree-2 basis
  std::vector<int> reduce_pair(int i, int j) const {
    if (i == j) return {};
    if (i > j) std::swap(i, j);  // symmetric in characteristic 2
    auto it = point_of_pair_.find({i, j});
    if (it == point_of_pair_.end()) return {};  // parallel lines: empty intersection
    int p = it->second;
    int min_line = idata_.points[p].lines[0];
    if (i == min_line) return {basis_id_.at({i, j})};
    return {basis_id_.at({min_line, j}), basis_id_.at({min_line, i})};
  }

  // wedge of two degree-1 vectors, as a degree-2 F2 vector
  F2Vector wedge(const F2Vector& x, const F2Vector& y) const {
    F2Vector out(dim2_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        bool coeff = (x.get(i) && y.get(j)) != (x.get(j) && y.get(i));
        if (!coeff) continue;
        for (int id : reduce_pair(static_cast<int>(i), static_cast<int>(j))) out.flip(id);
      }
    return out;
  }

  F2Vector to_deg1(const OmegaClass& w) const {
    F2Vector v(n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (w.bits[i]) v.set(i, true);
    return v;
  }

  // matrix of (omega ^ -) : deg1 -> deg2 in the e-basis
  F2Matrix wedge_matrix(const OmegaClass& w) const {
    F2Matrix m(dim2_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == j || !w.bits[i]) continue;
        for (int id : reduce_pair(static_cast<int>(i), static_cast<int>(j))) {
          m.set(id, j, !m.get(id, j));
        }
      }
    }
    return m;
  }

 private:
  std::size_t n_;
  IntersectionData idata_;
  std::map<std::pair<int, int>, int> point_of_pair_;
  std::map<std::pair<int, int>, int> basis_id_;
  std::size_t dim2_ = 0;
};

struct AomotoReport {
  std::size_t alpha0 = 0, alpha1 = 0, alpha2 = 0;
  std::vector<F2Vector> kernel_basis_deg1;
};

inline AomotoReport aomoto_ranks(const OSAlgebraF2& os, const OmegaClass& w) {
  if (w.size() != os.lines()) throw std::invalid_argument("omega length mismatch");
  if (w.is_zero()) throw std::invalid_argument("omega must be nonzero");
  F2Matrix m = os.wedge_matrix(w);
  std::size_t rank = m.rank();
  std::size_t nullity = os.lines() - rank;
  AomotoReport r;
  r.alpha0 = 0;  // 1 -> omega is injective for omega != 0
  r.alpha1 = nullity - 1;
  r.alpha2 = os.dim_deg2() - rank;
  r.kernel_basis_deg1 = m.kernel_basis();
  return r;
}

inline AomotoReport aomoto_ranks(const Arrangement& arr, const OmegaClass& w) {
  return aomoto_ranks(OSAlgebraF2(arr), w);
}

}  // namespace arrcover
