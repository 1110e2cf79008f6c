// Stratification of the real plane by a line arrangement: intersection data,
// then the full face poset (chambers / edges / vertices as sign vectors with
// adjacency and exact rotational order around every vertex).
//
// Face enumeration: compute vertices exactly, sort them along each line to cut
// it into edges, then obtain chamber representatives by offsetting each edge
// sample perpendicularly by an adaptively halved exact epsilon. Everything is
// validated against the Zaslavsky chamber count; a mismatch throws.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "arrcover/arrangement.hpp"

namespace arrcover {

struct IntersectionPoint {
  FieldElement x, y;
  std::vector<int> lines;  // incident line indices (0-based), ascending; size >= 2
};

struct IntersectionData {
  std::vector<IntersectionPoint> points;
  std::vector<std::vector<int>> parallel_classes;  // classes of >= 2 parallel lines

  // b_2 of the complement: sum over points of (multiplicity - 1)
  std::size_t b2() const {
    std::size_t s = 0;
    for (const auto& p : points) s += p.lines.size() - 1;
    return s;
  }
  std::map<std::size_t, std::size_t> multiplicity_histogram() const {
    std::map<std::size_t, std::size_t> h;
    for (const auto& p : points) ++h[p.lines.size()];
    return h;
  }
};

namespace detail {

struct XYLess {
  bool operator()(const std::pair<FieldElement, FieldElement>& p,
                  const std::pair<FieldElement, FieldElement>& q) const {
    int c = (p.first - q.first).sign();
    if (c != 0) return c < 0;
    return (p.second - q.second).sign() < 0;
  }
};

}  // namespace detail

inline IntersectionData intersection_data(const Arrangement& arr) {
  const std::size_t n = arr.size();
  IntersectionData out;

  std::map<std::pair<FieldElement, FieldElement>, std::set<int>, detail::XYLess> points;
  std::map<std::pair<FieldElement, FieldElement>, std::vector<int>, detail::XYLess> directions;

  for (std::size_t i = 0; i < n; ++i) {
    // canonical direction key for the parallel class of line i
    const Line& li = arr.line(i);
    std::pair<FieldElement, FieldElement> key =
        li.a.is_zero() ? std::make_pair(FieldElement(0), FieldElement(1))
                       : std::make_pair(FieldElement(1), li.b / li.a);
    directions[key].push_back(static_cast<int>(i));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Line& li = arr.line(i);
      const Line& lj = arr.line(j);
      FieldElement det = li.a * lj.b - lj.a * li.b;
      if (det.is_zero()) continue;  // parallel
      FieldElement x = (li.c * lj.b - lj.c * li.b) / det;
      FieldElement y = (li.a * lj.c - lj.a * li.c) / det;
      auto& s = points[{x, y}];
      s.insert(static_cast<int>(i));
      s.insert(static_cast<int>(j));
    }

  for (auto& [xy, lines] : points)
    out.points.push_back(
        IntersectionPoint{xy.first, xy.second, std::vector<int>(lines.begin(), lines.end())});
  for (auto& [dir, members] : directions)
    if (members.size() >= 2) out.parallel_classes.push_back(members);

  // consistency: every unordered pair of lines is accounted for exactly once
  std::size_t pairs = 0;
  for (const auto& p : out.points) pairs += p.lines.size() * (p.lines.size() - 1) / 2;
  for (const auto& cls : out.parallel_classes) pairs += cls.size() * (cls.size() - 1) / 2;
  if (pairs != n * (n - 1) / 2)
    throw std::logic_error("intersection data fails the pair-counting identity");
  return out;
}

struct Face {
  std::vector<std::int8_t> signs;  // one entry in {-1,0,+1} per line
  int dim = 2;
  FieldElement sx, sy;  // sample point witnessing the sign vector
};

struct PosetEdge {
  int line = -1;         // supporting line (0-based)
  int v0 = -1, v1 = -1;  // endpoints along the direction (-b, a); -1 = unbounded
  int chamber_pos = -1;  // adjacent chamber on the + side of the line
  int chamber_neg = -1;  // adjacent chamber on the - side
  std::vector<std::int8_t> signs;
  FieldElement sx, sy;
};

struct PosetVertex {
  FieldElement x, y;
  std::vector<int> lines;        // incident lines, ascending
  std::vector<int> edges_ccw;    // 2m incident edges in counterclockwise order
  std::vector<int> sectors_ccw;  // sectors_ccw[i]: chamber between edges i and i+1
};

struct RotEntry {
  bool is_edge;
  int id;
};

class FacePoset {
 public:
  explicit FacePoset(const Arrangement& arr) : arr_(arr), idata_(intersection_data(arr)) {
    build();
  }

  const Arrangement& arrangement() const { return arr_; }
  const IntersectionData& intersections() const { return idata_; }
  const std::vector<Face>& chambers() const { return chambers_; }
  const std::vector<PosetEdge>& edges() const { return edges_; }
  const std::vector<PosetVertex>& vertices() const { return vertices_; }

  // cyclic alternating sequence edge, chamber, edge, chamber, ... of length 4m
  std::vector<RotEntry> rotational_order(std::size_t vertex) const {
    const PosetVertex& v = vertices_.at(vertex);
    std::vector<RotEntry> seq;
    for (std::size_t i = 0; i < v.edges_ccw.size(); ++i) {
      seq.push_back({true, v.edges_ccw[i]});
      seq.push_back({false, v.sectors_ccw[i]});
    }
    return seq;
  }

 private:
  std::vector<std::int8_t> sign_vector(const FieldElement& x, const FieldElement& y) const {
    std::vector<std::int8_t> s(arr_.size());
    for (std::size_t m = 0; m < arr_.size(); ++m)
      s[m] = static_cast<std::int8_t>(arr_.line(m).eval(x, y).sign());
    return s;
  }

  void build() {
    const std::size_t n = arr_.size();

    for (const auto& p : idata_.points)
      vertices_.push_back(PosetVertex{p.x, p.y, p.lines, {}, {}});

    // cut each line into edges at its vertices
    std::vector<std::vector<std::pair<int, int>>> edges_at_vertex(vertices_.size());
    for (std::size_t l = 0; l < n; ++l) {
      const Line& ln = arr_.line(l);
      FieldElement dx = -ln.b, dy = ln.a;  // direction along the line
      std::vector<int> on_line;
      for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (std::binary_search(vertices_[v].lines.begin(), vertices_[v].lines.end(),
                               static_cast<int>(l)))
          on_line.push_back(static_cast<int>(v));
      std::sort(on_line.begin(), on_line.end(), [&](int u, int w) {
        FieldElement pu = dx * vertices_[u].x + dy * vertices_[u].y;
        FieldElement pw = dx * vertices_[w].x + dy * vertices_[w].y;
        return (pu - pw).sign() < 0;
      });

      auto add_edge = [&](int v0, int v1, FieldElement sx, FieldElement sy) {
        PosetEdge e;
        e.line = static_cast<int>(l);
        e.v0 = v0;
        e.v1 = v1;
        e.sx = sx;
        e.sy = sy;
        e.signs = sign_vector(sx, sy);
        for (std::size_t m = 0; m < n; ++m)
          if (e.signs[m] == 0 && m != l)
            throw std::logic_error("edge sample point lies on a foreign line");
        int id = static_cast<int>(edges_.size());
        edges_.push_back(std::move(e));
        if (v0 >= 0) edges_at_vertex[v0].push_back({id, +1});  // leaves v0 in +direction
        if (v1 >= 0) edges_at_vertex[v1].push_back({id, -1});  // leaves v1 in -direction
        return id;
      };

      if (on_line.empty()) {
        FieldElement bx, by;  // any base point of the line
        if (!ln.b.is_zero()) {
          bx = FieldElement(0);
          by = ln.c / ln.b;
        } else {
          bx = ln.c / ln.a;
          by = FieldElement(0);
        }
        add_edge(-1, -1, bx, by);
        continue;
      }
      const PosetVertex& first = vertices_[on_line.front()];
      const PosetVertex& last = vertices_[on_line.back()];
      add_edge(-1, on_line.front(), first.x - dx, first.y - dy);
      for (std::size_t k = 0; k + 1 < on_line.size(); ++k) {
        const PosetVertex& a = vertices_[on_line[k]];
        const PosetVertex& b = vertices_[on_line[k + 1]];
        add_edge(on_line[k], on_line[k + 1], (a.x + b.x) / FieldElement(2),
                 (a.y + b.y) / FieldElement(2));
      }
      add_edge(on_line.back(), -1, last.x + dx, last.y + dy);
    }

    // chambers from perpendicular offsets of edge samples
    std::map<std::vector<std::int8_t>, int> chamber_of_signs;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const Line& ln = arr_.line(edges_[e].line);
      for (int side : {+1, -1}) {
        FieldElement eps(1);
        int id = -1;
        for (int tries = 0; tries < 64; ++tries) {
          FieldElement qx = edges_[e].sx + eps * FieldElement(side) * ln.a;
          FieldElement qy = edges_[e].sy + eps * FieldElement(side) * ln.b;
          std::vector<std::int8_t> s = sign_vector(qx, qy);
          bool ok = true;
          for (std::size_t m = 0; m < n && ok; ++m) {
            if (s[m] == 0) ok = false;
            if (static_cast<int>(m) != edges_[e].line && s[m] != edges_[e].signs[m]) ok = false;
          }
          if (ok) {
            auto [it, inserted] =
                chamber_of_signs.try_emplace(s, static_cast<int>(chambers_.size()));
            if (inserted) chambers_.push_back(Face{s, 2, qx, qy});
            id = it->second;
            break;
          }
          eps = eps / FieldElement(2);
        }
        if (id < 0) throw std::logic_error("chamber sampling did not converge");
        (side > 0 ? edges_[e].chamber_pos : edges_[e].chamber_neg) = id;
      }
    }

    // Zaslavsky validation: #chambers = 1 + n + sum_p (m_p - 1)
    std::size_t expected = 1 + n + idata_.b2();
    if (chambers_.size() != expected)
      throw std::logic_error("chamber count " + std::to_string(chambers_.size()) +
                             " differs from Zaslavsky count " + std::to_string(expected));
    std::size_t expected_edges = n;
    for (const auto& p : idata_.points) expected_edges += p.lines.size();
    if (edges_.size() != expected_edges) throw std::logic_error("edge count mismatch");

    // rotational order around each vertex
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      auto& vert = vertices_[v];
      auto dir_of = [&](const std::pair<int, int>& ed) {
        const Line& ln = arr_.line(edges_[ed.first].line);
        FieldElement dx = -ln.b, dy = ln.a;
        if (ed.second < 0) {
          dx = -dx;
          dy = -dy;
        }
        return std::make_pair(dx, dy);
      };
      auto& inc = edges_at_vertex[v];
      if (inc.size() != 2 * vert.lines.size())
        throw std::logic_error("vertex has wrong number of incident edges");
      // counterclockwise angular sort starting from direction (1, 0)
      auto half = [](const std::pair<FieldElement, FieldElement>& d) {
        int sy = d.second.sign();
        if (sy > 0) return 0;
        if (sy < 0) return 1;
        return d.first.sign() > 0 ? 0 : 1;
      };
      std::sort(inc.begin(), inc.end(), [&](const auto& e1, const auto& e2) {
        auto d1 = dir_of(e1), d2 = dir_of(e2);
        int h1 = half(d1), h2 = half(d2);
        if (h1 != h2) return h1 < h2;
        FieldElement cross = d1.first * d2.second - d1.second * d2.first;
        return cross.sign() > 0;
      });
      for (const auto& ed : inc) vert.edges_ccw.push_back(ed.first);
      for (std::size_t i = 0; i < inc.size(); ++i) {
        int e1 = vert.edges_ccw[i];
        int e2 = vert.edges_ccw[(i + 1) % inc.size()];
        int common = -1;
        for (int c1 : {edges_[e1].chamber_pos, edges_[e1].chamber_neg})
          for (int c2 : {edges_[e2].chamber_pos, edges_[e2].chamber_neg})
            if (c1 == c2) {
              if (common >= 0 && common != c1)
                throw std::logic_error("ambiguous sector between consecutive edges");
              common = c1;
            }
        if (common < 0) throw std::logic_error("no sector chamber between consecutive edges");
        vert.sectors_ccw.push_back(common);
      }
      // the 2m sectors around a vertex are pairwise distinct chambers
      std::set<int> uniq(vert.sectors_ccw.begin(), vert.sectors_ccw.end());
      if (uniq.size() != vert.sectors_ccw.size())
        throw std::logic_error("repeated sector chamber around a vertex");
    }
  }

  Arrangement arr_;
  IntersectionData idata_;
  std::vector<Face> chambers_;
  std::vector<PosetEdge> edges_;
  std::vector<PosetVertex> vertices_;
};

inline FacePoset face_poset(const Arrangement& arr) { return FacePoset(arr); }

}  // namespace arrcover
