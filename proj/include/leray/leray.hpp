#pragma once

#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "leray/complex.hpp"
#include "leray/error.hpp"
#include "leray/field.hpp"
#include "leray/homology.hpp"

namespace leray {

inline constexpr int kMaxLerayVertices = 20;

// `subset` is S for the Leray number and the face σ of Y for the relative
// and link versions.
struct LerayWitness {
  VertexSet subset;
  int degree = 0;
};

struct LerayResult {
  int value = 0;
  std::optional<LerayWitness> witness;  // present iff value > 0
};

namespace detail {

// Folds the Betti vector of one complex indexed by `subset` into `best`:
// larger top degree wins, ties go to the smaller subset.
inline void fold_top_degree(const BettiVector& b, const VertexSet& subset, LerayResult& best) {
  const int top = b.top_degree();
  if (top < 0) return;
  if (top + 1 > best.value || (top + 1 == best.value && subset < best.witness->subset)) {
    best.value = top + 1;
    best.witness = LerayWitness{subset, top};
  }
}

inline void require_relative_inputs(const SimplicialComplex& x, const SimplicialComplex& y) {
  if (x.ambient() != y.ambient())
    throw InputError("X and Y must share the ambient vertex set (" + x.ambient().str() + " vs " +
                     y.ambient().str() + ")");
  if (y.is_void()) throw InputError("Y must not be the void complex");
  require_mask_width(x.ambient(), kMaxLerayVertices);
}

}  // namespace detail

/// L(X; F): least d >= 0 with h̃_i(X[S]) = 0 for all S ⊆ V and i >= d.
/// Witness: lexicographically smallest S with h̃_{d-1}(X[S]) != 0.
inline LerayResult leray_number(const SimplicialComplex& x, const FieldSpec& field) {
  if (x.is_void()) throw InputError("Leray number of the void complex");
  const VertexSet& v = x.ambient();
  require_mask_width(v, kMaxLerayVertices);
  LerayResult best;
  const Mask full = static_cast<Mask>((std::uint64_t{1} << v.size()) - 1);
  for (Mask m = 0;; ++m) {
    VertexSet s = v.subset(m);
    detail::fold_top_degree(reduced_betti(induced(x, s), field), s, best);
    if (m == full) break;
  }
  return best;
}

/// L_Y(X; F): as L(X) but S ranges over V \ σ for σ ∈ Y. Witness is σ.
inline LerayResult relative_leray(const SimplicialComplex& x, const SimplicialComplex& y,
                                  const FieldSpec& field) {
  detail::require_relative_inputs(x, y);
  LerayResult best;
  for (const auto& sigma : y.faces())
    detail::fold_top_degree(reduced_betti(induced(x, x.ambient() - sigma), field), sigma, best);
  return best;
}

/// The same quantity measured on links: least d with h̃_i(lk(X, σ)) = 0 for
/// all σ ∈ Y, i >= d. Faces of Y outside X have void links.
inline LerayResult link_leray(const SimplicialComplex& x, const SimplicialComplex& y,
                              const FieldSpec& field) {
  detail::require_relative_inputs(x, y);
  LerayResult best;
  for (const auto& sigma : y.faces())
    detail::fold_top_degree(reduced_betti(link(x, sigma), field), sigma, best);
  return best;
}

struct PropertyCounterexample {
  VertexSet deleted;    // σ1
  VertexSet linked;     // σ2
  int degree = 0;
};

struct PropertyResult {
  bool holds = true;
  std::optional<PropertyCounterexample> counterexample;
};

/**
 * Property P_d(k1, k2) of the pair (X, A): h̃_i(lk(X[V \ σ1], σ2)) = 0 for
 * all i >= d and all disjoint σ1, σ2 ⊆ A with |σ1| <= k1, |σ2| <= k2.
 *
 * Reports the first counterexample found; σ1 runs upward by mask, σ2 over
 * the submasks of A \ σ1 from the top down.
 */
inline PropertyResult property_P(const SimplicialComplex& x, const VertexSet& a, int d, int k1,
                                 int k2, const FieldSpec& field) {
  if (!a.is_subset_of(x.ambient())) throw InputError("property_P: A is not inside the ambient set");
  if (k1 < 0 || k2 < 0) throw InputError("property_P: k1 and k2 must be non-negative");
  require_mask_width(a, kMaxLerayVertices);
  const Mask full = static_cast<Mask>((std::uint64_t{1} << a.size()) - 1);
  for (Mask m1 = 0;; ++m1) {
    if (std::popcount(m1) <= k1) {
      const VertexSet s1 = a.subset(m1);
      const SimplicialComplex deleted = induced(x, x.ambient() - s1);
      const Mask rest = full & ~m1;
      for (Mask m2 = rest;; m2 = (m2 - 1) & rest) {
        if (std::popcount(m2) <= k2) {
          const VertexSet s2 = a.subset(m2);
          const BettiVector b = reduced_betti(link(deleted, s2), field);
          for (int i = std::max(d, -1); i <= b.top_degree(); ++i)
            if (b[i]) return {false, PropertyCounterexample{s1, s2, i}};
        }
        if (m2 == 0) break;
      }
    }
    if (m1 == full) break;
  }
  return {};
}

}  // namespace leray
