#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "leray/complex.hpp"
#include "leray/helly.hpp"
#include "leray/matroid.hpp"
#include "leray/nerve.hpp"

namespace leray {

/**
 * Deterministic random source. Each (seed, stream) pair is an independent
 * stream, so instance i of a suite never depends on instances before it.
 * Draws avoid the standard distributions, whose output differs between
 * standard libraries.
 */
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return p >= 1.0 || unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Probability of sampling each candidate facet, indexed by facet dimension.
// Dimensions past the end reuse the last value.
struct DensityProfile {
  std::vector<double> by_dim;

  static DensityProfile constant(double p) { return {{p}}; }
  double at(int dim) const {
    if (by_dim.empty()) return 0.0;
    return by_dim[std::min<std::size_t>(static_cast<std::size_t>(dim), by_dim.size() - 1)];
  }
};

/// Samples facets subset by subset, then closes downward. Always contains ∅.
inline SimplicialComplex random_complex(Rng& rng, const VertexSet& ambient, const DensityProfile& density) {
  require_mask_width(ambient, 16);
  std::vector<Simplex> facets;
  const Mask n = Mask{1} << ambient.size();
  for (Mask m = 1; m < n; ++m)
    if (rng.chance(density.at(std::popcount(m) - 1))) facets.push_back(ambient.subset(m));
  return SimplicialComplex::from_facets(ambient, facets, true);
}

inline SimplicialComplex random_complex(std::uint64_t seed, int n, const DensityProfile& density) {
  Rng rng(seed, 0);
  return random_complex(rng, vertex_range(1, static_cast<Vertex>(n)), density);
}

// A density profile that favours mid-dimensional facets, which is where
// induced subcomplexes carry interesting homology.
inline DensityProfile varied_profile(Rng& rng, int n) {
  DensityProfile d;
  for (int k = 0; k < n; ++k) d.by_dim.push_back(rng.unit() * (k == 0 ? 0.9 : 0.6 / k));
  return d;
}

/// Random matroid on {1..n}: uniform, partition, or a truncated direct sum of
/// uniform matroids, always passed through full axiom validation.
inline Matroid random_matroid(Rng& rng, int n, int max_rank = -1) {
  const VertexSet ground = vertex_range(1, static_cast<Vertex>(n));
  if (max_rank < 0) max_rank = n;
  Matroid m = free_matroid(ground);
  if (n == 0) return m;
  switch (rng.below(3)) {
    case 0:
      m = uniform_matroid(rng.between(0, std::min(n, max_rank)), n);
      break;
    case 1: {
      const int k = rng.between(1, std::min(n, std::max(1, max_rank)));
      std::vector<std::vector<Vertex>> blocks(k);
      for (int i = 0; i < n; ++i) blocks[i < k ? i : rng.below(k)].push_back(static_cast<Vertex>(i + 1));
      std::vector<VertexSet> bs;
      for (auto& b : blocks) bs.emplace_back(std::move(b));
      m = partition_matroid(bs);
      break;
    }
    default: {
      // Direct sum of U_{r_i, |B_i|} on random blocks, truncated to rank t.
      std::vector<int> block_of(n);
      const int k = rng.between(1, n);
      for (int i = 0; i < n; ++i) block_of[i] = static_cast<int>(rng.below(k));
      std::vector<int> size(k, 0), cap(k, 0);
      for (int b : block_of) ++size[b];
      int total = 0;
      for (int b = 0; b < k; ++b) total += cap[b] = rng.between(0, size[b]);
      const int t = std::min({max_rank, total, rng.between(0, n)});
      m = Matroid::from_predicate(ground, [&](Mask a) {
        if (std::popcount(a) > t) return false;
        std::vector<int> used(k, 0);
        for (int i = 0; i < n; ++i)
          if (a >> i & 1u && ++used[block_of[i]] > cap[block_of[i]]) return false;
        return true;
      });
      break;
    }
  }
  return validate_matroid(m.independents());
}

/**
 * Instance with Y^∨ ⊆ M ⊆ X by construction: X is M plus random faces and
 * Y is M^∨ plus random faces (so Y^∨ ⊆ M by inclusion reversal).
 */
inline HellyInstance random_instance(Rng& rng, int n, const FieldSpec& field, int max_rank = -1) {
  const Matroid m = random_matroid(rng, n, max_rank);
  const VertexSet& v = m.ground();
  const SimplicialComplex mc = m.independents();
  const auto x = complex_union(mc, random_complex(rng, v, varied_profile(rng, n)));
  const auto y = complex_union(alexander_dual(mc), random_complex(rng, v, varied_profile(rng, n)));
  return HellyInstance(x, y, m, field);
}

inline HellyInstance random_instance(std::uint64_t seed, std::uint64_t index, int n, const FieldSpec& field) {
  Rng rng(seed, index);
  return random_instance(rng, n, field);
}

/// `count` random subsets of {1..universe}.
inline SetFamily random_set_family(Rng& rng, int universe, int count) {
  std::vector<VertexSet> sets;
  const double p = 0.3 + 0.5 * rng.unit();
  for (int i = 0; i < count; ++i) {
    std::vector<Vertex> s;
    for (int u = 1; u <= universe; ++u)
      if (rng.chance(p)) s.push_back(static_cast<Vertex>(u));
    sets.emplace_back(std::move(s));
  }
  return SetFamily(sets);
}

}  // namespace leray
