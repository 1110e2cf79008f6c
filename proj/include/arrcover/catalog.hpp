// Built-in arrangements.
//
// decID: 15 lines in five parallel triples, the deconed icosidodecahedral
// arrangement. The lines have normals at angles 72k degrees with offsets
// cos 36, (sqrt5-2)/2 and -sin 18; a linear shear y -> y / sin 72 turns all
// coefficients into Q(sqrt5) exactly while preserving the topology and the
// line numbering: family k is  cos(72k) x + u_k y = c  with
// u_k = sin(72k)/sin(72) in {0, 1, (sqrt5-1)/2, -(sqrt5-1)/2, -1}.
//
// DP: the double star subarrangement, lines 6..15 of decID.
// generic(n): tangents to a parabola, no two parallel, no three concurrent.
// pencil(n): n concurrent lines through the origin.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "arrcover/arrangement.hpp"

namespace arrcover {

namespace detail {

inline std::vector<Line> dec_id_lines() {
  auto fe = [](long an, long ad, long bn, long bd) {
    return FieldElement(make_rational(an, ad), make_rational(bn, bd));
  };
  // family data at k = 0..4: normal (cos 72k, u_k)
  const FieldElement A[5] = {
      fe(1, 1, 0, 1),    // 1
      fe(-1, 4, 1, 4),   // (sqrt5-1)/4
      fe(-1, 4, -1, 4),  // -(sqrt5+1)/4
      fe(-1, 4, -1, 4),  // -(sqrt5+1)/4
      fe(-1, 4, 1, 4),   // (sqrt5-1)/4
  };
  const FieldElement B[5] = {
      fe(0, 1, 0, 1),    // 0
      fe(1, 1, 0, 1),    // 1
      fe(-1, 2, 1, 2),   // (sqrt5-1)/2
      fe(1, 2, -1, 2),   // -(sqrt5-1)/2
      fe(-1, 1, 0, 1),   // -1
  };
  const FieldElement outer = fe(1, 4, 1, 4);   // (1+sqrt5)/4 = cos 36
  const FieldElement inner = fe(-1, 1, 1, 2);  // (sqrt5-2)/2
  const FieldElement blue = fe(1, 4, -1, 4);   // (1-sqrt5)/4 = -sin 18
  // figure numbering: family k carries (outer, inner, blue) lines
  const int label[5][3] = {{8, 3, 13}, {10, 5, 15}, {7, 2, 12}, {9, 4, 14}, {6, 1, 11}};

  std::vector<Line> lines(15);
  for (int k = 0; k < 5; ++k) {
    const FieldElement offs[3] = {outer, inner, blue};
    for (int t = 0; t < 3; ++t) lines[label[k][t] - 1] = Line{A[k], B[k], offs[t]};
  }
  return lines;
}

}  // namespace detail

inline Arrangement dec_id() { return Arrangement(detail::dec_id_lines()); }

// lines 6..15 of decID, in the same order
inline Arrangement double_star() {
  std::vector<Line> all = detail::dec_id_lines();
  return Arrangement(std::vector<Line>(all.begin() + 5, all.end()));
}

// tangents  2k x - y = k^2  to the parabola y = x^2, k = 1..n
inline Arrangement generic_lines(int n) {
  if (n < 1) throw std::invalid_argument("generic(n) needs n >= 1");
  std::vector<Line> lines;
  for (int k = 1; k <= n; ++k)
    lines.push_back(Line{FieldElement(2 * k), FieldElement(-1),
                         FieldElement(Rational(static_cast<long>(k) * k))});
  return Arrangement(std::move(lines));
}

// x = 0 together with y = k x, k = 1..n-1
inline Arrangement pencil_lines(int n) {
  if (n < 2) throw std::invalid_argument("pencil(n) needs n >= 2");
  std::vector<Line> lines;
  lines.push_back(Line{FieldElement(1), FieldElement(0), FieldElement(0)});
  for (int k = 1; k < n; ++k)
    lines.push_back(Line{FieldElement(k), FieldElement(-1), FieldElement(0)});
  return Arrangement(std::move(lines));
}

inline Arrangement catalog(const std::string& name) {
  if (name == "decID") return dec_id();
  if (name == "DP") return double_star();
  auto param = [&](const std::string& prefix) -> int {
    if (name.size() <= prefix.size() + 2 || name.compare(0, prefix.size(), prefix) != 0 ||
        name[prefix.size()] != '(' || name.back() != ')')
      return -1;
    std::string num = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    for (char c : num)
      if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
    return std::stoi(num);
  };
  if (int n = param("generic"); n >= 0) return generic_lines(n);
  if (int n = param("pencil"); n >= 0) return pencil_lines(n);
  throw std::invalid_argument("unknown catalog name: " + name +
                              " (try decID, DP, generic(n), pencil(n))");
}

}  // namespace arrcover
