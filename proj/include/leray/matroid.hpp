#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leray/complex.hpp"
#include "leray/error.hpp"
#include "leray/poset.hpp"

namespace leray {

inline constexpr int kMaxMatroidGround = 20;

// Witness that an independence system fails the exchange axiom: |a| < |b|
// and no element of b \ a extends a.
struct ExchangeViolation {
  Simplex a, b;
};

/**
 * A matroid, identified with the simplicial complex of its independent sets.
 *
 * Independence and rank are tabulated over every subset of the ground set,
 * so the ground set is limited to kMaxMatroidGround elements.
 */
class Matroid {
 public:
  // Builds from an independence predicate on ground-set masks without
  // checking the axioms. Use validate_matroid for untrusted input.
  template <class Pred>
  static Matroid from_predicate(VertexSet ground, Pred independent) {
    require_mask_width(ground, kMaxMatroidGround);
    Matroid m;
    m.ground_ = std::move(ground);
    const std::size_t n = std::size_t{1} << m.ground_.size();
    m.independent_.assign(n, 0);
    m.rank_.assign(n, 0);
    for (Mask a = 0; a < n; ++a) m.independent_[a] = independent(a) ? 1 : 0;
    for (Mask a = 0; a < n; ++a) {
      if (m.independent_[a]) {
        m.rank_[a] = static_cast<std::uint8_t>(std::popcount(a));
        continue;
      }
      std::uint8_t r = 0;
      for (Mask rest = a; rest; rest &= rest - 1) r = std::max(r, m.rank_[a & ~(rest & -rest)]);
      m.rank_[a] = r;
    }
    return m;
  }

  static Matroid from_complex_unchecked(const SimplicialComplex& indep) {
    const VertexSet& g = indep.ambient();
    require_mask_width(g, kMaxMatroidGround);
    std::vector<char> table(std::size_t{1} << g.size(), 0);
    for (const auto& f : indep.faces()) table[g.mask_of(f)] = 1;
    return from_predicate(g, [&](Mask a) { return table[a] != 0; });
  }

  const VertexSet& ground() const noexcept { return ground_; }
  Mask full_mask() const noexcept { return static_cast<Mask>((std::uint64_t{1} << ground_.size()) - 1); }

  bool is_independent_mask(Mask a) const { return independent_[a] != 0; }
  int rank_mask(Mask a) const { return rank_[a]; }
  Mask closure_mask(Mask a) const {
    Mask c = a;
    const int r = rank_[a];
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      const Mask bit = Mask{1} << i;
      if (!(a & bit) && rank_[a | bit] == r) c |= bit;
    }
    return c;
  }

  bool is_independent(const VertexSet& a) const { return is_independent_mask(checked_mask(a)); }
  int rank(const VertexSet& a) const { return rank_mask(checked_mask(a)); }
  int rank() const { return rank_mask(full_mask()); }
  VertexSet closure(const VertexSet& a) const { return ground_.subset(closure_mask(checked_mask(a))); }
  bool is_flat(const VertexSet& a) const {
    const Mask m = checked_mask(a);
    return closure_mask(m) == m;
  }

  // The complex of independent sets.
  SimplicialComplex independents() const {
    std::vector<Simplex> faces;
    for (Mask a = 0; a <= full_mask(); ++a) {
      if (independent_[a]) faces.push_back(ground_.subset(a));
      if (a == full_mask()) break;
    }
    return SimplicialComplex::from_closed_faces(ground_, std::move(faces));
  }

  std::vector<Simplex> bases() const {
    std::vector<Simplex> b;
    const int r = rank();
    for (Mask a = 0;; ++a) {
      if (independent_[a] && std::popcount(a) == r) b.push_back(ground_.subset(a));
      if (a == full_mask()) break;
    }
    std::sort(b.begin(), b.end());
    return b;
  }

  friend bool operator==(const Matroid& x, const Matroid& y) {
    return x.ground_ == y.ground_ && x.independent_ == y.independent_;
  }

 private:
  Matroid() = default;

  Mask checked_mask(const VertexSet& a) const {
    if (!a.is_subset_of(ground_))
      throw InputError(a.str() + " is not a subset of the ground set " + ground_.str());
    return ground_.mask_of(a);
  }

  VertexSet ground_;
  std::vector<char> independent_;
  std::vector<std::uint8_t> rank_;
};

/// First exchange-axiom failure in canonical order, if any.
inline std::optional<ExchangeViolation> exchange_violation(const SimplicialComplex& indep) {
  const VertexSet& g = indep.ambient();
  require_mask_width(g, kMaxMatroidGround);
  std::vector<Mask> faces;
  std::vector<char> table(std::size_t{1} << g.size(), 0);
  for (const auto& f : indep.faces()) {
    faces.push_back(g.mask_of(f));
    table[faces.back()] = 1;
  }
  for (Mask a : faces)
    for (Mask b : faces) {
      if (std::popcount(a) >= std::popcount(b)) continue;
      bool extends = false;
      for (Mask rest = b & ~a; rest && !extends; rest &= rest - 1)
        extends = table[a | (rest & -rest)] != 0;
      if (!extends) return ExchangeViolation{g.subset(a), g.subset(b)};
    }
  return std::nullopt;
}

/// First S (in increasing mask order) whose induced subcomplex is not pure.
inline std::optional<VertexSet> purity_violation(const SimplicialComplex& indep) {
  const VertexSet& g = indep.ambient();
  require_mask_width(g, kMaxMatroidGround);
  const Mask full = static_cast<Mask>((std::uint64_t{1} << g.size()) - 1);
  std::vector<char> table(std::size_t{1} << g.size(), 0);
  for (const auto& f : indep.faces()) table[g.mask_of(f)] = 1;
  for (Mask s = 0;; ++s) {
    int facet_size = -1;
    bool pure = true;
    // Enumerate the faces inside s and test maximality within s.
    for (Mask f = s;; f = (f - 1) & s) {
      if (table[f]) {
        bool maximal = true;
        for (Mask rest = s & ~f; rest; rest &= rest - 1)
          if (table[f | (rest & -rest)]) {
            maximal = false;
            break;
          }
        if (maximal) {
          const int sz = std::popcount(f);
          if (facet_size >= 0 && sz != facet_size) pure = false;
          facet_size = sz;
        }
      }
      if (f == 0 || !pure) break;
    }
    if (!pure) return g.subset(s);
    if (s == full) break;
  }
  return std::nullopt;
}

/// Checks both characterizations and returns the matroid.
inline Matroid validate_matroid(const SimplicialComplex& indep) {
  if (indep.is_void()) throw InputError("a matroid needs at least the empty independent set");
  if (auto v = exchange_violation(indep))
    throw InputError("not a matroid: exchange fails for A=" + v->a.str() + ", B=" + v->b.str());
  if (auto s = purity_violation(indep))
    throw InputError("not a matroid: induced subcomplex on " + s->str() + " is not pure");
  return Matroid::from_complex_unchecked(indep);
}

/// U_{r,n} on {1..n}.
inline Matroid uniform_matroid(int r, int n) {
  if (n < 0 || r < 0 || r > n) throw InputError("uniform matroid needs 0 <= r <= n");
  VertexSet ground = n ? vertex_range(1, static_cast<Vertex>(n)) : VertexSet{};
  return Matroid::from_predicate(std::move(ground), [r](Mask a) { return std::popcount(a) <= r; });
}

/// Independent sets meet each block at most once.
inline Matroid partition_matroid(const std::vector<VertexSet>& blocks) {
  VertexSet ground;
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw InputError("partition matroid blocks must be nonempty");
    ground = ground | b;
    total += b.size();
  }
  if (ground.size() != total) throw InputError("partition matroid blocks must be disjoint");
  require_mask_width(ground, kMaxMatroidGround);
  std::vector<Mask> block_masks;
  for (const auto& b : blocks) block_masks.push_back(ground.mask_of(b));
  return Matroid::from_predicate(ground, [&](Mask a) {
    return std::all_of(block_masks.begin(), block_masks.end(),
                       [a](Mask b) { return std::popcount(a & b) <= 1; });
  });
}

/**
 * Flats of a matroid. `all` holds every flat in canonical order; `proper`
 * drops the ground set (this is K(M)); `positive` further drops the rank-0
 * flat closure(∅) (this is K_0(M)).
 */
struct FlatLattice {
  std::vector<VertexSet> all;
  std::vector<VertexSet> proper;
  std::vector<VertexSet> positive;
};

inline FlatLattice flat_lattice(const Matroid& m) {
  std::vector<Mask> closed;
  for (Mask a = 0;; ++a) {
    closed.push_back(m.closure_mask(a));
    if (a == m.full_mask()) break;
  }
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  FlatLattice l;
  for (Mask k : closed) l.all.push_back(m.ground().subset(k));
  std::sort(l.all.begin(), l.all.end());
  for (const auto& k : l.all) {
    if (k == m.ground()) continue;
    l.proper.push_back(k);
    if (m.rank(k) > 0) l.positive.push_back(k);
  }
  return l;
}

/// Flats ordered by inclusion.
inline Poset<VertexSet> flat_poset(std::vector<VertexSet> flats) {
  return Poset<VertexSet>::from_predicate(
      std::move(flats), [](const VertexSet& a, const VertexSet& b) { return a.is_subset_of(b); },
      false);
}

/// Lexicographically smallest basis of `a`.
inline Simplex smallest_basis(const Matroid& m, const VertexSet& a) {
  const int r = m.rank(a);
  const Mask am = m.ground().mask_of(a);
  std::optional<Simplex> best;
  for (Mask b = am;; b = (b - 1) & am) {
    if (std::popcount(b) == r && m.is_independent_mask(b)) {
      Simplex s = m.ground().subset(b);
      if (!best || s < *best) best = std::move(s);
    }
    if (b == 0) break;
  }
  return *best;
}

/// M/K with the given basis B_K of K.
inline Matroid contract_with_basis(const Matroid& m, const VertexSet& k, const Simplex& basis) {
  if (!m.is_flat(k)) throw InputError("contract: " + k.str() + " is not a flat");
  if (!basis.is_subset_of(k) || !m.is_independent(basis) || static_cast<int>(basis.size()) != m.rank(k))
    throw InputError("contract: " + basis.str() + " is not a basis of " + k.str());
  VertexSet rest = m.ground() - k;
  const Mask bm = m.ground().mask_of(basis);
  return Matroid::from_predicate(rest, [&](Mask a) {
    return m.is_independent_mask(bm | m.ground().mask_of(rest.subset(a)));
  });
}

/// M/K = {A ⊆ V \ K : B_K ∪ A ∈ M}, using the smallest basis of K.
inline Matroid contract(const Matroid& m, const VertexSet& k) {
  if (!m.is_flat(k)) throw InputError("contract: " + k.str() + " is not a flat");
  return contract_with_basis(m, k, smallest_basis(m, k));
}

/// M* = {σ : ρ(V \ σ) = ρ(V)}.
inline Matroid dual(const Matroid& m) {
  const int r = m.rank();
  const Mask full = m.full_mask();
  return Matroid::from_predicate(m.ground(), [&](Mask a) { return m.rank_mask(full & ~a) == r; });
}

// Free matroid: every subset independent.
inline Matroid free_matroid(const VertexSet& ground) {
  return Matroid::from_predicate(ground, [](Mask) { return true; });
}

}  // namespace leray
