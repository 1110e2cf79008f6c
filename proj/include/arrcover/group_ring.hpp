// Elements c0 + c1*t of the group ring Z[t]/(t^2 - 1); t is the deck
// transformation of the double covering.
#pragma once

#include <cstdint>
#include <string>

namespace arrcover {

struct GroupRingElem {
  std::int64_t c0 = 0, c1 = 0;

  GroupRingElem() = default;
  GroupRingElem(std::int64_t a, std::int64_t b) : c0(a), c1(b) {}

  static GroupRingElem t_power(int e) { return (e & 1) ? GroupRingElem{0, 1} : GroupRingElem{1, 0}; }

  bool is_zero() const { return c0 == 0 && c1 == 0; }

  GroupRingElem operator+(const GroupRingElem& o) const { return {c0 + o.c0, c1 + o.c1}; }
  GroupRingElem operator-(const GroupRingElem& o) const { return {c0 - o.c0, c1 - o.c1}; }
  GroupRingElem operator-() const { return {-c0, -c1}; }
  GroupRingElem operator*(const GroupRingElem& o) const {
    // (a + bt)(c + dt) = (ac + bd) + (ad + bc) t
    return {c0 * o.c0 + c1 * o.c1, c0 * o.c1 + c1 * o.c0};
  }
  GroupRingElem& operator+=(const GroupRingElem& o) {
    c0 += o.c0;
    c1 += o.c1;
    return *this;
  }
  bool operator==(const GroupRingElem& o) const { return c0 == o.c0 && c1 == o.c1; }

  std::int64_t specialize(int t_value) const { return t_value > 0 ? c0 + c1 : c0 - c1; }

  std::string str() const {
    return std::to_string(c0) + (c1 >= 0 ? "+" : "") + std::to_string(c1) + "t";
  }
};

}  // namespace arrcover
