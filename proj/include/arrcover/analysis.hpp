// Orchestration: the per-arrangement pipeline (face poset -> OS algebra and
// Salvetti model), the per-omega invariants alpha_k / rho_k / tau_k with every
// identity the report cares about, omega scans, the torsion conjecture
// checker, and the Milnor fiber (-1)-eigenspace dimensions.
//
// Identities evaluated per analysis (all degrees k = 0, 1, 2, tau_{-1} := 0):
//   main:   alpha_k = rho_k + tau_k + tau_{k-1}
//           and b_k(cover) = b_k(X) + alpha_k - tau_k - tau_{k-1}
//   leray:  b_k(cover) = b_k(X) + rho_k
//   mod2:   rank_{Z2} H_k(cover, Z2) = b_k(X) + alpha_k
//   uct:    rank_{Z2} H_k(cover, Z2) = b_k(cover) + tau_k + tau_{k-1}
//   ps:     rho_k <= alpha_k
// alpha comes from the F2 Orlik-Solomon pipeline, rho and tau from integer
// Smith normal forms of two different complexes; the identities are oracles
// over disjoint code paths, not shortcuts.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "arrcover/catalog.hpp"
#include "arrcover/decone.hpp"
#include "arrcover/homology.hpp"
#include "arrcover/os_algebra.hpp"
#include "arrcover/salvetti.hpp"

namespace arrcover {

struct ArrangementContext {
  Arrangement arr;
  FacePoset poset;
  OSAlgebraF2 os;
  CellComplex cells;

  explicit ArrangementContext(Arrangement a)
      : arr(std::move(a)),
        poset(arr),
        os(arr, poset.intersections()),
        cells(build_salvetti(poset)) {}

  std::size_t lines() const { return arr.size(); }
  std::array<long, 3> betti_x() const {
    return {1, static_cast<long>(arr.size()), static_cast<long>(poset.intersections().b2())};
  }
};

struct DegreeReport {
  long alpha = 0, rho = 0, tau = 0;
  long b_x = 0, b_cover = 0;
  long mod2_cover = 0;
  AbelianGroup h_cover, h_local;
};

struct IdentityFlags {
  bool main = false, leray = false, mod2 = false, uct = false, ps = false;
  bool all_ok() const { return main && leray && mod2 && uct && ps; }
};

struct InvariantReport {
  OmegaClass omega;
  std::array<DegreeReport, 3> degree;
  IdentityFlags identities;
  std::string first_failure;  // empty when all identities hold
};

inline InvariantReport analyze(const ArrangementContext& ctx, const OmegaClass& omega,
                               HomologyStrategy strategy = HomologyStrategy::KernelRestricted) {
  if (omega.size() != ctx.lines()) throw std::invalid_argument("omega length mismatch");
  if (omega.is_zero()) throw std::invalid_argument("omega must be nonzero");

  AomotoReport am = aomoto_ranks(ctx.os, omega);
  DecoratedComplex dc = decorate(ctx.cells, omega);
  HomologyProfile twisted = homology(specialize(dc, -1), strategy);
  HomologyProfile cover = homology(double_cover_complex(dc), strategy);

  InvariantReport rep;
  rep.omega = omega;
  std::array<long, 3> alpha = {static_cast<long>(am.alpha0), static_cast<long>(am.alpha1),
                               static_cast<long>(am.alpha2)};
  std::array<long, 3> bx = ctx.betti_x();
  for (int k = 0; k < 3; ++k) {
    DegreeReport& d = rep.degree[k];
    d.alpha = alpha[k];
    d.rho = twisted[k].b;
    d.tau = cover[k].tau;
    d.b_x = bx[k];
    d.b_cover = cover[k].b;
    d.mod2_cover = cover[k].mod2_rank;
    d.h_cover = cover[k].group;
    d.h_local = twisted[k].group;
  }

  IdentityFlags& f = rep.identities;
  f.main = f.leray = f.mod2 = f.uct = f.ps = true;
  auto fail = [&rep](const std::string& what, int k) {
    if (rep.first_failure.empty())
      rep.first_failure = what + " fails at degree " + std::to_string(k);
  };
  for (int k = 0; k < 3; ++k) {
    const DegreeReport& d = rep.degree[k];
    long tprev = k == 0 ? 0 : rep.degree[k - 1].tau;
    if (d.alpha != d.rho + d.tau + tprev ||
        d.b_cover != d.b_x + d.alpha - d.tau - tprev) {
      f.main = false;
      fail("main theorem alpha_k = rho_k + tau_k + tau_{k-1}", k);
    }
    if (d.b_cover != d.b_x + d.rho) {
      f.leray = false;
      fail("leray b_k(cover) = b_k(X) + rho_k", k);
    }
    if (d.mod2_cover != d.b_x + d.alpha) {
      f.mod2 = false;
      fail("mod-2 rank formula rank H_k(cover, Z2) = b_k(X) + alpha_k", k);
    }
    if (d.mod2_cover != d.b_cover + d.tau + tprev) {
      f.uct = false;
      fail("universal coefficients rank H_k(cover, Z2) = b_k + tau_k + tau_{k-1}", k);
    }
    if (d.rho > d.alpha) {
      f.ps = false;
      fail("inequality rho_k <= alpha_k", k);
    }
  }
  return rep;
}

struct VerifyResult {
  bool ok = false;
  std::string diagnostics;
  InvariantReport report;
};

inline VerifyResult verify(const ArrangementContext& ctx, const OmegaClass& omega) {
  VerifyResult v;
  v.report = analyze(ctx, omega);
  v.ok = v.report.identities.all_ok();
  v.diagnostics = v.ok ? "all identities hold" : v.report.first_failure;
  return v;
}

// ---- omega scans ----------------------------------------------------------

struct OmegaSet {
  bool all = true;
  std::size_t random_count = 1000;
  std::uint64_t seed = 1;
};

// all: masks 1 .. 2^n - 1 ascending (line 1 = least significant bit).
// random: `random_count` distinct classes drawn with the given seed, always
// including all-ones and every index-interval sum, sorted ascending.
inline std::vector<OmegaClass> enumerate_omegas(std::size_t n, const OmegaSet& set) {
  if (n == 0 || n > 63) throw std::invalid_argument("omega enumeration needs 1 <= n <= 63");
  const std::uint64_t total = (std::uint64_t(1) << n) - 1;
  std::vector<OmegaClass> out;
  if (set.all) {
    out.reserve(total);
    for (std::uint64_t mask = 1; mask <= total; ++mask) out.push_back(OmegaClass::from_mask(n, mask));
    return out;
  }
  std::set<std::uint64_t> masks;
  masks.insert(total);  // all-ones
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      masks.insert(((std::uint64_t(1) << (j - i + 1)) - 1) << (i - 1));
  std::mt19937_64 rng(set.seed);
  std::size_t want = std::min<std::size_t>(std::max(set.random_count, masks.size()), total);
  while (masks.size() < want) {
    std::uint64_t m = rng() & total;
    if (m != 0) masks.insert(m);
  }
  for (std::uint64_t m : masks) out.push_back(OmegaClass::from_mask(n, m));
  return out;
}

struct ScanRow {
  OmegaClass omega;
  long alpha1 = 0, rho1 = 0, tau1 = 0;
  AbelianGroup torsion_local;  // torsion of H_1(X, L_omega)
  bool has_z4 = false;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::size_t torsion_hits = 0;  // rows with tau_1 > 0
  std::size_t z4_hits = 0;       // rows with a Z_4 summand in H_1(X, L_omega)
};

namespace detail {

inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  unsigned used = std::min<unsigned>(threads, static_cast<unsigned>(count));
  pool.reserve(used);
  for (unsigned t = 0; t < used; ++t)
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline ScanRow scan_one(const ArrangementContext& ctx, const OmegaClass& omega) {
  ScanRow row;
  row.omega = omega;
  row.alpha1 = static_cast<long>(aomoto_ranks(ctx.os, omega).alpha1);
  DecoratedComplex dc = decorate(ctx.cells, omega);
  HomologyProfile twisted = homology(specialize(dc, -1), HomologyStrategy::DirectFactors);
  HomologyProfile cover = homology(double_cover_complex(dc), HomologyStrategy::DirectFactors);
  row.rho1 = twisted[1].b;
  row.tau1 = cover[1].tau;
  AbelianGroup t = twisted[1].group;
  t.rank = 0;  // torsion part only
  row.torsion_local = t;
  row.has_z4 = t.has_z4();
  if (row.alpha1 != row.rho1 + row.tau1)
    throw std::logic_error("alpha_1 = rho_1 + tau_1 violated at omega " + omega.bitstring() +
                           " (implementation bug)");
  return row;
}

// rows come back sorted by omega mask regardless of scheduling
inline ScanResult scan(const ArrangementContext& ctx, const std::vector<OmegaClass>& omegas,
                       unsigned threads = 1) {
  ScanResult res;
  res.rows.resize(omegas.size());
  detail::parallel_for(omegas.size(), threads,
                       [&](std::size_t i) { res.rows[i] = scan_one(ctx, omegas[i]); });
  std::sort(res.rows.begin(), res.rows.end(),
            [](const ScanRow& a, const ScanRow& b) { return a.omega.mask() < b.omega.mask(); });
  for (const ScanRow& r : res.rows) {
    if (r.tau1 > 0) ++res.torsion_hits;
    if (r.has_z4) ++res.z4_hits;
  }
  return res;
}

// ---- conjecture: 2-torsion in the cover <=> Z_4 in the local homology -----

struct ConjectureRow {
  OmegaClass omega;
  bool torsion_in_cover = false;
  bool z4_in_local = false;
};

struct ConjectureResult {
  bool consistent = true;
  std::vector<ConjectureRow> rows;             // every scanned class
  std::vector<ConjectureRow> counterexamples;  // rows where the two flags differ
};

inline ConjectureResult conjecture_check(const ArrangementContext& ctx,
                                         const std::vector<OmegaClass>& omegas,
                                         unsigned threads = 1) {
  ScanResult sc = scan(ctx, omegas, threads);
  ConjectureResult out;
  out.rows.reserve(sc.rows.size());
  for (const ScanRow& r : sc.rows) {
    ConjectureRow c{r.omega, r.tau1 > 0, r.has_z4};
    if (c.torsion_in_cover != c.z4_in_local) {
      out.consistent = false;
      out.counterexamples.push_back(c);
    }
    out.rows.push_back(std::move(c));
  }
  return out;
}

// ---- Milnor fiber (-1)-eigenspace ------------------------------------------

struct MilnorReport {
  std::size_t planes = 0;
  int infinity_index = 0;             // 1-based plane sent to infinity
  std::array<long, 3> eigen_dim{};    // dim H_k(F, C)_{-1} = alpha_k - tau_k - tau_{k-1}
  InvariantReport analysis;           // full report on the deconing, omega = all ones
};

inline MilnorReport milnor_minus_one(const CentralArrangement& central, int infinity_1based = -1) {
  if (central.planes.size() % 2 != 0)
    throw std::invalid_argument("the (-1)-eigenspace formula needs an even number of planes, got " +
                                std::to_string(central.planes.size()));
  int inf = infinity_1based < 0 ? static_cast<int>(central.planes.size()) : infinity_1based;
  MilnorReport rep;
  rep.planes = central.planes.size();
  rep.infinity_index = inf;
  ArrangementContext ctx(decone(central, static_cast<std::size_t>(inf)));
  rep.analysis = analyze(ctx, OmegaClass::all_ones(ctx.lines()));
  for (int k = 0; k < 3; ++k) {
    long tprev = k == 0 ? 0 : rep.analysis.degree[k - 1].tau;
    rep.eigen_dim[k] = rep.analysis.degree[k].alpha - rep.analysis.degree[k].tau - tprev;
  }
  return rep;
}

}  // namespace arrcover
