// Mod-2 cohomology classes omega in H^1(X, Z_2), given by one bit per line.
// Input syntax shared with the CLI: comma-separated 1-based indices, the
// keyword `all`, or a bitstring whose length equals the number of lines.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrcover {

struct OmegaClass {
  std::vector<bool> bits;  // bits[i] = coefficient of e_{i+1}

  OmegaClass() = default;
  explicit OmegaClass(std::size_t n) : bits(n, false) {}

  static OmegaClass all_ones(std::size_t n) {
    OmegaClass w(n);
    w.bits.assign(n, true);
    return w;
  }
  static OmegaClass from_indices(std::size_t n, const std::vector<int>& idx_1based) {
    OmegaClass w(n);
    for (int i : idx_1based) {
      if (i < 1 || static_cast<std::size_t>(i) > n)
        throw std::invalid_argument("omega index " + std::to_string(i) + " out of range 1.." +
                                    std::to_string(n));
      if (w.bits[i - 1]) throw std::invalid_argument("repeated omega index " + std::to_string(i));
      w.bits[i - 1] = true;
    }
    return w;
  }
  static OmegaClass from_mask(std::size_t n, std::uint64_t mask) {
    OmegaClass w(n);
    for (std::size_t i = 0; i < n; ++i) w.bits[i] = (mask >> i) & 1u;
    return w;
  }

  std::size_t size() const { return bits.size(); }
  bool is_zero() const {
    for (bool b : bits)
      if (b) return false;
    return true;
  }
  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) m |= std::uint64_t(1) << i;
    return m;
  }
  std::string bitstring() const {
    std::string s(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) s[i] = '1';
    return s;
  }
  std::string index_list() const {
    std::string s;
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) {
        if (!s.empty()) s += ",";
        s += std::to_string(i + 1);
      }
    return s;
  }
};

// Accepts "all", a bitstring of length n, or comma-separated 1-based indices.
inline OmegaClass parse_omega(const std::string& spec, std::size_t n) {
  if (spec == "all") return OmegaClass::all_ones(n);
  bool bitstring_shaped = spec.size() == n && !spec.empty();
  for (char c : spec)
    if (c != '0' && c != '1') bitstring_shaped = false;
  if (bitstring_shaped) {
    OmegaClass w(n);
    for (std::size_t i = 0; i < n; ++i) w.bits[i] = spec[i] == '1';
    return w;
  }
  std::vector<int> idx;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string tok = spec.substr(pos, comma == std::string::npos ? spec.size() - pos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("empty omega index");
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad omega token: " + tok);
    idx.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (idx.empty()) throw std::invalid_argument("empty omega specification");
  return OmegaClass::from_indices(n, idx);
}

}  // namespace arrcover
