// Passing between central 3-arrangements (planes through the origin) and
// affine line arrangements: decone sends a chosen plane to infinity, cone is
// its inverse (the extra plane z=0 is appended last).
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrcover/arrangement.hpp"
#include "arrcover/parse.hpp"

namespace arrcover {

namespace detail {

using Vec3 = std::array<FieldElement, 3>;

inline FieldElement det3(const Vec3& u, const Vec3& v, const Vec3& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

// Solve z1 u + z2 v + z3 w = rhs by Cramer's rule.
inline Vec3 solve_in_frame(const Vec3& u, const Vec3& v, const Vec3& w, const Vec3& rhs) {
  FieldElement d = det3(u, v, w);
  return Vec3{det3(rhs, v, w) / d, det3(u, rhs, w) / d, det3(u, v, rhs) / d};
}

}  // namespace detail

// Chart frame candidates: a fixed deterministic sequence of rational
// directions, so deconing is reproducible.
inline Arrangement decone(const CentralArrangement& ca, std::size_t infinity_index_1based) {
  const std::size_t n = ca.planes.size();
  if (infinity_index_1based < 1 || infinity_index_1based > n)
    throw std::invalid_argument("infinity index out of range");
  const std::size_t s = infinity_index_1based - 1;
  const detail::Vec3& w = ca.planes[s];

  static const detail::Vec3 basis[] = {
      {FieldElement(1), FieldElement(0), FieldElement(0)},
      {FieldElement(0), FieldElement(1), FieldElement(0)},
      {FieldElement(0), FieldElement(0), FieldElement(1)},
      {FieldElement(1), FieldElement(1), FieldElement(0)},
      {FieldElement(1), FieldElement(0), FieldElement(1)},
      {FieldElement(0), FieldElement(1), FieldElement(1)},
  };
  const detail::Vec3* u = nullptr;
  const detail::Vec3* v = nullptr;
  for (std::size_t i = 0; i < std::size(basis) && !u; ++i)
    for (std::size_t j = i + 1; j < std::size(basis) && !u; ++j)
      if (!detail::det3(basis[i], basis[j], w).is_zero()) {
        u = &basis[i];
        v = &basis[j];
      }
  if (!u) throw std::logic_error("no chart frame found");

  std::vector<Line> lines;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == s) continue;
    detail::Vec3 z = detail::solve_in_frame(*u, *v, w, ca.planes[i]);
    if (z[0].is_zero() && z[1].is_zero())
      throw std::logic_error("a remaining plane became the line at infinity");
    lines.push_back(Line{z[0], z[1], -z[2]});
  }
  return Arrangement(std::move(lines));
}

inline CentralArrangement cone(const Arrangement& arr) {
  CentralArrangement ca;
  for (const Line& l : arr.lines()) ca.planes.push_back({l.a, l.b, -l.c});
  ca.planes.push_back({FieldElement(0), FieldElement(0), FieldElement(1)});
  return ca;
}

inline std::string render_central_file(const CentralArrangement& ca) {
  std::string out = "central\n";
  for (const auto& p : ca.planes)
    out += p[0].str() + " " + p[1].str() + " " + p[2].str() + "\n";
  return out;
}

}  // namespace arrcover
