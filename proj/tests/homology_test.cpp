#include <gtest/gtest.h>

#include <random>

#include "arrcover/catalog.hpp"
#include "arrcover/complex_io.hpp"
#include "arrcover/homology.hpp"
#include "arrcover/parse.hpp"
#include "test_support.hpp"

using namespace arrcover;

namespace {

AbelianGroup grp(long rank, std::vector<long> tors = {}) {
  AbelianGroup g;
  g.rank = rank;
  for (long d : tors) g.torsion.push_back(d);
  return g;
}

ZComplex make_complex(std::array<std::size_t, 3> ranks, IntMatrix d1, IntMatrix d2) {
  ZComplex z;
  z.ranks = ranks;
  z.d1 = std::move(d1);
  z.d2 = std::move(d2);
  return z;
}

// random complex with d1 d2 = 0: pick d2 freely, then build d1 whose rows lie
// in ker(d2^t), via the Smith certificate of d2^t
ZComplex random_complex(std::mt19937_64& rng) {
  std::size_t n0 = 1 + rng() % 4, n1 = 1 + rng() % 5, n2 = rng() % 4;
  IntMatrix d2(n1, n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      d2.at(i, j) = static_cast<long>(rng() % 7) - 3;
  SmithForm s = smith_normal_form(d2.transpose(), /*with_certificate=*/true);
  std::size_t r = s.invariant_factors.size();
  // columns r.. of V span ker(d2^t); random integer combinations give d1 rows
  IntMatrix d1(n0, n1);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t k = r; k < n1; ++k) {
      long coeff = static_cast<long>(rng() % 5) - 2;
      for (std::size_t j = 0; j < n1; ++j) d1.at(i, j) += coeff * s.V.at(j, k);
    }
  return make_complex({n0, n1, n2}, std::move(d1), std::move(d2));
}

}  // namespace

TEST(Homology, CircleAndProjectivePlanePatterns) {
  // 1 vertex, 1 loop, zero boundary
  ZComplex circle = make_complex({1, 1, 0}, IntMatrix(1, 1), IntMatrix(1, 0));
  HomologyProfile h = homology(circle);
  EXPECT_EQ(h[0].group, grp(1));
  EXPECT_EQ(h[1].group, grp(1));

  // Z --x2--> Z --0--> Z
  IntMatrix two(1, 1);
  two.at(0, 0) = 2;
  ZComplex rp2 = make_complex({1, 1, 1}, IntMatrix(1, 1), std::move(two));
  h = homology(rp2);
  EXPECT_EQ(h[0].group, grp(1));
  EXPECT_EQ(h[1].group, grp(0, {2}));
  EXPECT_EQ(h[2].group, grp(0));
  EXPECT_EQ(h[1].mod2_rank, 1);  // b_1 + tau_1 + tau_0 = 0 + 1 + 0
}

TEST(Homology, TauCounts) {
  EXPECT_EQ(grp(15, {2}).tau(), 1);
  EXPECT_EQ(grp(0, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 4}).tau(), 14);
  EXPECT_EQ(grp(7).tau(), 0);
  EXPECT_EQ(grp(0, {3, 9}).tau(), 0);
  EXPECT_EQ(grp(0, {2, 6}).has_z4(), false);
  EXPECT_EQ(grp(0, {2, 4}).has_z4(), true);
  EXPECT_EQ(grp(0, {12}).has_z4(), true);
}

TEST(Homology, GroupRendering) {
  EXPECT_EQ(grp(0).str(), "0");
  EXPECT_EQ(grp(3).str(), "Z^3");
  EXPECT_EQ(grp(1, {2, 2, 4}).str(), "Z + Z_2^2 + Z_4");
  EXPECT_EQ(grp(0, {6}).str(), "Z_6");
  EXPECT_EQ(grp(0, {6}).str_primary(), "Z_2 + Z_3");
  EXPECT_EQ(grp(2, {2, 6, 12}).str_primary(), "Z^2 + Z_2^2 + Z_3^2 + Z_4");
}

TEST(Homology, RejectsBadComplexes) {
  IntMatrix d1(1, 1), d2(1, 1);
  d1.at(0, 0) = 1;
  d2.at(0, 0) = 1;
  EXPECT_THROW(homology(make_complex({1, 1, 1}, d1, d2), HomologyStrategy::DirectFactors),
               std::invalid_argument);
  EXPECT_THROW(homology(make_complex({1, 1, 1}, d1, d2), HomologyStrategy::KernelRestricted),
               std::invalid_argument);
  EXPECT_THROW(homology(make_complex({2, 1, 1}, d1, d2)), std::invalid_argument);  // dims
}

// independent oracle: matrix rank over Q by Gaussian elimination on mpq
std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m.at(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][col] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[rank], a[p]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

TEST(Homology, RoutesAgreeAndUCTHoldsOnRandomComplexes) {
  std::mt19937_64 rng(13579);
  for (int iter = 0; iter < 300; ++iter) {
    ZComplex z = random_complex(rng);
    ASSERT_TRUE((z.d1 * z.d2).is_zero());
    HomologyProfile a = homology(z, HomologyStrategy::KernelRestricted);
    HomologyProfile b = homology(z, HomologyStrategy::DirectFactors);
    for (int k = 0; k < 3; ++k) {
      ASSERT_EQ(a[k].group, b[k].group) << "degree " << k;
      // universal coefficients: rank_{Z2} H_k(-, Z2) = b_k + tau_k + tau_{k-1}
      long tprev = k == 0 ? 0 : a[k - 1].tau;
      ASSERT_EQ(a[k].mod2_rank, a[k].b + a[k].tau + tprev);
    }
    // H_2 of a 2-complex is torsion-free
    ASSERT_TRUE(a[2].group.torsion.empty());
    ASSERT_EQ(tau(a, 2), 0);
    ASSERT_EQ(tau(a, -1), 0);

    // Betti numbers agree with rational elimination
    long r1 = static_cast<long>(rational_rank(z.d1));
    long r2 = static_cast<long>(rational_rank(z.d2));
    ASSERT_EQ(a[0].b, static_cast<long>(z.ranks[0]) - r1);
    ASSERT_EQ(a[1].b, static_cast<long>(z.ranks[1]) - r1 - r2);
    ASSERT_EQ(a[2].b, static_cast<long>(z.ranks[2]) - r2);
  }
}

// H_0 rank equals the number of connected components of the 1-skeleton:
// block sums of arrangement complexes against a graph-traversal oracle
TEST(Homology, H0MatchesComponentCount) {
  std::mt19937_64 rng(24680);
  for (int iter = 0; iter < 10; ++iter) {
    int blocks = 1 + static_cast<int>(rng() % 3);
    std::vector<ZComplex> parts;
    for (int b = 0; b < blocks; ++b) {
      Arrangement arr = tsupport::random_arrangement(rng, 2 + static_cast<int>(rng() % 3));
      CellComplex cx = build_salvetti(FacePoset(arr));
      DecoratedComplex dc = decorate(cx, OmegaClass::all_ones(arr.size()));
      parts.push_back(specialize(dc, +1));
    }
    std::array<std::size_t, 3> ranks{0, 0, 0};
    for (const auto& p : parts)
      for (int k = 0; k < 3; ++k) ranks[k] += p.ranks[k];
    ZComplex sum = make_complex(ranks, IntMatrix(ranks[0], ranks[1]), IntMatrix(ranks[1], ranks[2]));
    std::array<std::size_t, 3> off{0, 0, 0};
    for (const auto& p : parts) {
      for (std::size_t i = 0; i < p.ranks[0]; ++i)
        for (std::size_t j = 0; j < p.ranks[1]; ++j) sum.d1.at(off[0] + i, off[1] + j) = p.d1.at(i, j);
      for (std::size_t i = 0; i < p.ranks[1]; ++i)
        for (std::size_t j = 0; j < p.ranks[2]; ++j) sum.d2.at(off[1] + i, off[2] + j) = p.d2.at(i, j);
      for (int k = 0; k < 3; ++k) off[k] += p.ranks[k];
    }

    // graph oracle: union the endpoints of every 1-cell
    std::vector<int> parent(ranks[0]);
    for (std::size_t i = 0; i < ranks[0]; ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t j = 0; j < ranks[1]; ++j) {
      int a = -1;
      for (std::size_t i = 0; i < ranks[0]; ++i)
        if (sum.d1.at(i, j) != 0) {
          if (a < 0)
            a = static_cast<int>(i);
          else
            parent[find(static_cast<int>(i))] = find(a);
        }
    }
    std::size_t components = 0;
    for (std::size_t i = 0; i < ranks[0]; ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components;

    HomologyProfile h = homology(sum, HomologyStrategy::DirectFactors);
    EXPECT_EQ(h[0].group.rank, static_cast<long>(components));
    EXPECT_EQ(blocks, static_cast<int>(components));
  }
}

TEST(AbstractComplex, LoadPlain) {
  AbstractComplex c = load_abstract_complex(
      R"({ "ranks": [1, 1, 0], "d1": [[0]], "d2": [], "decorated": false })");
  ASSERT_FALSE(c.decorated);
  HomologyProfile h = homology(c.plain);
  EXPECT_EQ(h[0].group, grp(1));
  EXPECT_EQ(h[1].group, grp(1));

  EXPECT_THROW(load_abstract_complex("{ nope"), std::invalid_argument);
  EXPECT_THROW(load_abstract_complex(R"({ "ranks": [1, 2] })"), std::invalid_argument);
  EXPECT_THROW(load_abstract_complex(R"({ "ranks": [2, 1, 0], "d1": [[0]], "d2": [] })"),
               std::invalid_argument);  // mismatched dims
  EXPECT_THROW(load_abstract_complex(
                   R"({ "ranks": [1, 1, 1], "d1": [[1]], "d2": [[1]] })"),
               std::invalid_argument);  // d1 d2 != 0
}

TEST(AbstractComplex, DecoratedCircleDoubleCover) {
  // circle with transport t: the connected double cover of S^1 is S^1
  AbstractComplex c = load_abstract_complex(
      R"({ "ranks": [1, 1, 0], "d1": [[[-1, 1]]], "d2": [], "decorated": true })");
  ASSERT_TRUE(c.decorated);
  ZComplex cov = double_cover_complex(c.dc);
  HomologyProfile h = homology(cov);
  EXPECT_EQ(h[0].group, grp(1));
  EXPECT_EQ(h[1].group, grp(1));

  ZComplex tw = specialize(c.dc, -1);
  HomologyProfile ht = homology(tw);
  EXPECT_EQ(ht[0].group, grp(0, {2}));  // (t - 1) at t = -1 is multiplication by -2

  EXPECT_THROW(load_abstract_complex(
                   R"({ "ranks": [1, 1, 0], "d1": [[[1, 0, 0]]], "d2": [], "decorated": true })"),
               std::invalid_argument);
}
