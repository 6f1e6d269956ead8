#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "leray/complex.hpp"
#include "leray/flat_spectral.hpp"
#include "leray/helly.hpp"
#include "leray/homology.hpp"
#include "leray/io.hpp"
#include "leray/leray.hpp"
#include "leray/matroid.hpp"
#include "leray/nerve.hpp"
#include "leray/random.hpp"

// Randomized property checks. Each check draws instance `index` from the
// stream (seed, index) and verifies one family of identities on it.
namespace leray::checks {

struct Outcome {
  std::size_t index = 0;
  bool passed = false;
  std::string detail;
};

using CheckFn = std::function<Outcome(std::uint64_t seed, std::size_t index)>;

namespace detail {

inline Outcome pass(std::size_t i, std::string detail = {}) { return {i, true, std::move(detail)}; }
inline Outcome fail(std::size_t i, std::string detail) { return {i, false, std::move(detail)}; }

inline const std::vector<FieldSpec>& two_fields() {
  static const std::vector<FieldSpec> f{FieldSpec::gf2(), FieldSpec::gf3()};
  return f;
}

// Random complex on {1..n} that is neither void nor the full simplex.
inline SimplicialComplex proper_complex(Rng& rng, int n) {
  const VertexSet v = vertex_range(1, static_cast<Vertex>(n));
  while (true) {
    auto x = random_complex(rng, v, varied_profile(rng, n));
    if (!x.is_full_simplex()) return x;
  }
}

}  // namespace detail

/// h̃_{|V|-2-q}(X) = h̃_{q-1}(X^∨) for every q, over GF(2) and GF(3).
inline Outcome alexander(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const int n = rng.between(4, 7);
  const auto x = detail::proper_complex(rng, n);
  const auto xd = alexander_dual(x);
  for (const auto& field : detail::two_fields()) {
    const auto b = reduced_betti(x, field);
    for (int q = -1; q <= n + 1; ++q)
      if (b[n - 2 - q] != cohomology_rank(xd, q - 1, field))
        return detail::fail(index, "duality fails at q=" + std::to_string(q) + " over " + field.name() +
                                       " for X=" + x.str());
  }
  return detail::pass(index);
}

/// Deletion-based and link-based relative Leray numbers agree.
inline Outcome link_deletion(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const int n = rng.between(2, 6);
  const VertexSet v = vertex_range(1, static_cast<Vertex>(n));
  const auto x = random_complex(rng, v, varied_profile(rng, n));
  const auto y = random_complex(rng, v, varied_profile(rng, n));
  for (const auto& field : detail::two_fields()) {
    const int a = relative_leray(x, y, field).value;
    const int b = link_leray(x, y, field).value;
    if (a != b)
      return detail::fail(index, "L_Y(X)=" + std::to_string(a) + " but link version=" + std::to_string(b) +
                                     " over " + field.name() + "; X=" + x.str() + " Y=" + y.str());
  }
  return detail::pass(index);
}

/// P_d(k1, k2) ⇔ P_d(k1+1, k2-1) for every shift with k1 + k2 <= |A|.
inline Outcome shift(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const int n = rng.between(2, 5);
  const VertexSet v = vertex_range(1, static_cast<Vertex>(n));
  const auto x = random_complex(rng, v, varied_profile(rng, n));
  std::vector<Vertex> av;
  for (Vertex u : v)
    if (rng.chance(0.7)) av.push_back(u);
  const VertexSet a(std::move(av));
  const int d = rng.between(0, std::max(0, n - 2));
  const FieldSpec field = detail::two_fields()[index % 2];
  const int size = static_cast<int>(a.size());
  std::map<std::pair<int, int>, bool> memo;
  auto holds = [&](int k1, int k2) {
    auto it = memo.find({k1, k2});
    if (it != memo.end()) return it->second;
    return memo[{k1, k2}] = property_P(x, a, d, k1, k2, field).holds;
  };
  for (int total = 1; total <= std::max(1, size); ++total)
    for (int k2 = 1; k2 <= total; ++k2) {
      const int k1 = total - k2;
      if (holds(k1, k2) != holds(k1 + 1, k2 - 1))
        return detail::fail(index, "P_" + std::to_string(d) + "(" + std::to_string(k1) + "," +
                                       std::to_string(k2) + ") differs from its shift; X=" + x.str() +
                                       " A=" + a.str());
    }
  return detail::pass(index);
}

/// Matroid axioms and the rank identities of duality and contraction.
inline Outcome matroid(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const int n = rng.between(1, 7);
  const Matroid m = random_matroid(rng, n);
  const Mask full = m.full_mask();

  // Exchange and purity agree on the matroid and on an arbitrary complex.
  const auto other = random_complex(rng, m.ground(), varied_profile(rng, n));
  if (exchange_violation(other).has_value() != purity_violation(other).has_value())
    return detail::fail(index, "exchange and purity disagree on " + other.str());
  if (exchange_violation(m.independents()) || purity_violation(m.independents()))
    return detail::fail(index, "validated matroid fails an axiom");

  for (Mask a = 0; a <= full; ++a) {
    for (Mask b = 0; b <= full; ++b)
      if (m.rank_mask(a | b) + m.rank_mask(a & b) > m.rank_mask(a) + m.rank_mask(b))
        return detail::fail(index, "rank is not submodular");
    for (Mask rest = ~a & full; rest; rest &= rest - 1) {
      const int gain = m.rank_mask(a | (rest & -rest)) - m.rank_mask(a);
      if (gain < 0 || gain > 1) return detail::fail(index, "rank is not unit-increasing");
    }
  }

  const Matroid md = dual(m);
  for (Mask a = 0; a <= full; ++a)
    if (md.rank_mask(a) != std::popcount(a) - m.rank() + m.rank_mask(full & ~a))
      return detail::fail(index, "dual rank formula fails at " + m.ground().subset(a).str());
  if (!(dual(md) == m)) return detail::fail(index, "dual is not an involution");

  const auto lattice = flat_lattice(m);
  for (const auto& k : lattice.all) {
    const Matroid c = contract(m, k);
    if (c.rank() != m.rank() - m.rank(k))
      return detail::fail(index, "contraction rank identity fails at K=" + k.str());
    // Every basis of K gives the same contraction.
    const Mask km = m.ground().mask_of(k);
    for (Mask s = km;; s = (s - 1) & km) {
      if (std::popcount(s) == m.rank(k) && m.is_independent_mask(s) &&
          !(contract_with_basis(m, k, m.ground().subset(s)) == c))
        return detail::fail(index, "contraction depends on the basis at K=" + k.str());
      if (s == 0) break;
    }
    if (k == m.ground()) continue;
    for (const auto& field : detail::two_fields())
      if (!contraction_lattice_betti(m, k, field).same_ranks(upper_interval_betti(m, k, field)))
        return detail::fail(index, "K_0(M/K) and K(M)_{>K} differ at K=" + k.str());
  }
  return detail::pass(index);
}

/// Homology of Δ(K_0(M)) sits in degree ρ(V) - 2 only.
inline Outcome concentration(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const int n = rng.between(1, 7);
  Matroid m = random_matroid(rng, n);
  if (m.rank() < 1) m = uniform_matroid(1, n);
  for (const auto& field : detail::two_fields()) {
    BettiVector b(field);
    try {
      b = flat_order_betti(m, field);
    } catch (const InternalError& e) {
      return detail::fail(index, e.what());
    }
    if (b[m.rank() - 2] != static_cast<std::size_t>(std::llabs(b.euler())))
      return detail::fail(index, "concentrated rank differs from |reduced Euler characteristic|");
  }
  return detail::pass(index);
}

/// Euler characteristic of the E1 page equals χ(∪ Y_K). Even indices use
/// constant families, odd ones the dualized Z_K construction.
inline Outcome euler(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const FieldSpec field = detail::two_fields()[index / 2 % 2];
  if (index % 2 == 0) {
    const int n = rng.between(1, 6);
    Matroid m = random_matroid(rng, n, 3);
    if (m.rank() < 1) m = uniform_matroid(1, n);
    const int tn = rng.between(1, 5);
    const auto t = random_complex(rng, vertex_range(1, static_cast<Vertex>(tn)), varied_profile(rng, tn));
    const auto fam = FlatFamily::build(m, FamilyMode::intersection, [&](const VertexSet&) { return t; });
    const auto page = e1_page(fam, field);
    const auto chk = euler_check(page, fam, field);
    if (!chk.ok)
      return detail::fail(index, "constant family: page " + std::to_string(chk.page) + " vs " +
                                     std::to_string(chk.target));
    return detail::pass(index, "constant");
  }
  while (true) {
    const int n = rng.between(2, 6);
    // ρ(M*) = n - ρ(M) <= 3
    const Matroid m = random_matroid(rng, n);
    if (n - m.rank() > 3 || n - m.rank() < 1) continue;
    const auto mc = m.independents();
    const auto x = complex_union(mc, random_complex(rng, m.ground(), varied_profile(rng, n)));
    const ZkConstruction zc(x);
    if (x.is_full_simplex() || zc.nodes().size() > 12) continue;
    const auto fam = dualized_zk_family(zc, m);
    // The page needs every Y_K nonvoid, i.e. no Z_K is a full simplex.
    if (std::any_of(fam.complexes().begin(), fam.complexes().end(),
                    [](const SimplicialComplex& c) { return c.is_void(); }))
      continue;
    const auto page = e1_page(fam, field);
    const auto chk = euler_check(page, fam, field);
    if (!chk.ok)
      return detail::fail(index, "dualized family: page " + std::to_string(chk.page) + " vs " +
                                     std::to_string(chk.target) + "; X=" + x.str());
    return detail::pass(index, "dualized");
  }
}

/// The nonvanishing flat exists and satisfies the rank equation.
inline Outcome nonvanishing(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const FieldSpec field = detail::two_fields()[index % 2];
  while (true) {
    const int n = rng.between(2, 6);
    const Matroid m = random_matroid(rng, n);
    const auto x = complex_union(m.independents(), random_complex(rng, m.ground(), varied_profile(rng, n)));
    if (x.is_full_simplex()) continue;
    const ZkConstruction zc(x);
    const auto fam = zk_family(zc, m);
    const auto law = validate_family(fam);
    if (!law.ok) return detail::fail(index, "Z_K family violates the union law; X=" + x.str());
    if (!family_intersection(fam).is_empty_complex())
      return detail::fail(index, "Z_K family does not intersect in {∅}; X=" + x.str());
    const auto found = find_nonvanishing_flat(fam, field);
    const Matroid& ms = fam.matroid();
    if (ms.rank(found.flat) != ms.rank() - found.p - 1)
      return detail::fail(index, "rank equation fails for K=" + found.flat.str());
    if (reduced_betti(fam.at(found.flat), field)[found.p - 1] == 0)
      return detail::fail(index, "recomputed homology vanishes for K=" + found.flat.str());
    return detail::pass(index);
  }
}

/// Both verifiers of the relative colorful Helly statement, plus the Z_K
/// homology identity on every flat of M*.
inline Outcome rtch(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const int n = rng.between(2, 7);
  const FieldSpec field = detail::two_fields()[index % 2];
  const HellyInstance inst = random_instance(rng, n, field);
  const auto& v = inst.vertices();
  const Witness w = verify_rtch_exhaustive(inst);
  if (!inst.x().contains(w.sigma) || w.rank_value > w.bound ||
      inst.matroid().rank(v - w.sigma) != w.rank_value)
    return detail::fail(index, "exhaustive witness invalid");
  const auto c = rtch_constructive(inst);
  const Witness& k = c.witness;
  if (!inst.x().contains(k.sigma) || k.rank_value > k.bound || k.bound != w.bound ||
      inst.matroid().rank(v - k.sigma) != k.rank_value)
    return detail::fail(index, "constructive witness invalid: K=" + k.sigma.str());
  if (!inst.y().contains(k.sigma))
    return detail::fail(index, (inst.x().is_full_simplex()
                                    ? "X is the full simplex and no face of Y meets the bound; K=V is not in Y"
                                    : "constructive K=" + k.sigma.str() + " is not in Y") +
                                   std::string("; X=") + inst.x().str() + " Y=" + inst.y().str() +
                                   " M bases=" + std::to_string(inst.matroid().bases().size()));
  if (!inst.x().is_full_simplex()) {
    const ZkConstruction zc(inst.x());
    for (const auto& flat : flat_lattice(dual(inst.matroid())).proper)
      for (const auto& f : detail::two_fields())
        if (!reduced_betti(zc.z(flat), f).same_ranks(reduced_betti(induced(zc.x_dual(), v - flat), f)))
          return detail::fail(index, "Betti(Z_K) != Betti(X^∨[V\\K]) at K=" + flat.str());
  }
  return detail::pass(index, "bound " + std::to_string(w.bound));
}

/// h(F) <= L(N(F)) + 1.
inline Outcome helly(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const int universe = rng.between(1, 6);
  const int count = rng.between(1, 7);
  const SetFamily f = random_set_family(rng, universe, count);
  const int h = helly_number(f);
  const int l = leray_number(nerve(f), FieldSpec::gf2()).value;
  if (h > l + 1)
    return detail::fail(index, "h=" + std::to_string(h) + " exceeds L(N)+1=" + std::to_string(l + 1));
  return detail::pass(index, "h=" + std::to_string(h) + " L=" + std::to_string(l));
}

inline const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> r{
      {"alexander", alexander}, {"link_deletion", link_deletion}, {"shift", shift},
      {"matroid", matroid},     {"concentration", concentration}, {"euler", euler},
      {"nonvanishing", nonvanishing},         {"rtch", rtch},     {"helly", helly}};
  return r;
}

/// Runs instances 0..count-1 on a worker pool; results are in index order.
/// Exceptions from a check count as failures of that instance.
inline std::vector<Outcome> run_suite(const CheckFn& check, std::uint64_t seed, std::size_t count,
                                      unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<Outcome> out(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = check(seed, i);
      } catch (const std::exception& e) {
        out[i] = detail::fail(i, std::string("exception: ") + e.what());
      }
      out[i].index = i;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace leray::checks
