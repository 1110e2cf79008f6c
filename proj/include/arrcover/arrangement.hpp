// Affine line arrangements with exact Q(sqrt5) coefficients.
// Line order is authoritative: it fixes the e_i numbering used by omega
// vectors and every downstream basis.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrcover/field_element.hpp"

namespace arrcover {

struct Line {
  FieldElement a, b, c;  // locus a*x + b*y = c
  int index = 0;         // 1-based position in the arrangement

  FieldElement eval(const FieldElement& x, const FieldElement& y) const {
    return a * x + b * y - c;
  }
};

inline bool proportional_lines(const Line& p, const Line& q) {
  return (p.a * q.b - q.a * p.b).is_zero() && (p.a * q.c - q.a * p.c).is_zero() &&
         (p.b * q.c - q.b * p.c).is_zero();
}

class Arrangement {
 public:
  Arrangement() = default;
  explicit Arrangement(std::vector<Line> lines) : lines_(std::move(lines)) {
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      lines_[i].index = static_cast<int>(i) + 1;
      if (lines_[i].a.is_zero() && lines_[i].b.is_zero())
        throw std::invalid_argument("line " + std::to_string(i + 1) + ": zero normal vector");
    }
    for (std::size_t i = 0; i < lines_.size(); ++i)
      for (std::size_t j = i + 1; j < lines_.size(); ++j)
        if (proportional_lines(lines_[i], lines_[j]))
          throw std::invalid_argument("duplicate line: " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1));
  }

  std::size_t size() const { return lines_.size(); }
  const Line& line(std::size_t i) const { return lines_[i]; }  // 0-based
  const std::vector<Line>& lines() const { return lines_; }

 private:
  std::vector<Line> lines_;
};

}  // namespace arrcover
