// Abstract chain complexes from JSON, for running the homology engine and the
// double-cover machinery on non-arrangement complexes:
//   { "ranks": [n0, n1, n2], "d1": [[...]], "d2": [[...]], "decorated": bool }
// Plain entries are integers; decorated entries are [c0, c1] pairs standing
// for c0 + c1 t.
#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "arrcover/homology.hpp"
#include "arrcover/salvetti.hpp"

namespace arrcover {

struct AbstractComplex {
  bool decorated = false;
  ZComplex plain;        // valid when !decorated
  DecoratedComplex dc;   // valid when decorated
};

inline AbstractComplex load_abstract_complex(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("ranks") || !j["ranks"].is_array() || j["ranks"].size() != 3)
    throw std::invalid_argument("complex JSON needs \"ranks\": [n0, n1, n2]");
  std::array<std::size_t, 3> ranks;
  for (int k = 0; k < 3; ++k) {
    if (!j["ranks"][k].is_number_unsigned())
      throw std::invalid_argument("ranks must be nonnegative integers");
    ranks[k] = j["ranks"][k].get<std::size_t>();
  }

  AbstractComplex out;
  out.decorated = j.value("decorated", false);

  auto read_plain = [&](const char* key, std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    if (rows == 0 || cols == 0) return m;
    if (!j.contains(key)) throw std::invalid_argument(std::string(key) + " missing");
    const auto& rowsj = j[key];
    if (!rowsj.is_array() || rowsj.size() != rows)
      throw std::invalid_argument(std::string(key) + " has wrong number of rows");
    for (std::size_t i = 0; i < rows; ++i) {
      if (!rowsj[i].is_array() || rowsj[i].size() != cols)
        throw std::invalid_argument(std::string(key) + " has wrong number of columns");
      for (std::size_t c = 0; c < cols; ++c) {
        if (!rowsj[i][c].is_number_integer())
          throw std::invalid_argument(std::string(key) + " entries must be integers");
        m.at(i, c) = static_cast<long>(rowsj[i][c].get<long long>());
      }
    }
    return m;
  };

  auto read_decorated = [&](const char* key, std::size_t rows, std::size_t cols,
                            std::vector<std::vector<RingEntry>>& out_cols) {
    out_cols.assign(cols, {});
    if (rows == 0 || cols == 0) return;
    if (!j.contains(key)) throw std::invalid_argument(std::string(key) + " missing");
    const auto& rowsj = j[key];
    if (!rowsj.is_array() || rowsj.size() != rows)
      throw std::invalid_argument(std::string(key) + " has wrong number of rows");
    for (std::size_t i = 0; i < rows; ++i) {
      if (!rowsj[i].is_array() || rowsj[i].size() != cols)
        throw std::invalid_argument(std::string(key) + " has wrong number of columns");
      for (std::size_t c = 0; c < cols; ++c) {
        const auto& e = rowsj[i][c];
        GroupRingElem v;
        if (e.is_number_integer()) {
          v = GroupRingElem{e.get<long long>(), 0};
        } else if (e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                   e[1].is_number_integer()) {
          v = GroupRingElem{e[0].get<long long>(), e[1].get<long long>()};
        } else {
          throw std::invalid_argument("decorated entries must be integers or [c0, c1] pairs");
        }
        if (!v.is_zero()) out_cols[c].push_back({static_cast<int>(i), v});
      }
    }
  };

  if (out.decorated) {
    out.dc.ranks = ranks;
    read_decorated("d1", ranks[0], ranks[1], out.dc.d1_cols);
    read_decorated("d2", ranks[1], ranks[2], out.dc.d2_cols);
    out.dc.omega_known = false;
    if (!decorated_dd_is_zero(out.dc))
      throw std::invalid_argument("d1 * d2 != 0 over Z[t]/(t^2-1)");
  } else {
    out.plain.ranks = ranks;
    out.plain.d1 = read_plain("d1", ranks[0], ranks[1]);
    out.plain.d2 = read_plain("d2", ranks[1], ranks[2]);
    if (ranks[1] > 0 && ranks[2] > 0 && !(out.plain.d1 * out.plain.d2).is_zero())
      throw std::invalid_argument("d1 * d2 != 0");
  }
  return out;
}

}  // namespace arrcover
