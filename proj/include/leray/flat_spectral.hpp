#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leray/complex.hpp"
#include "leray/error.hpp"
#include "leray/homology.hpp"
#include "leray/matroid.hpp"
#include "leray/poset.hpp"

namespace leray {

// INTERSECTION: Y_K ∩ Y_K' = Y_{K∩K'}.  UNION: Z_K ∪ Z_K' = Z_{K∩K'}.
enum class FamilyMode { intersection, union_of };

inline const char* mode_name(FamilyMode m) {
  return m == FamilyMode::intersection ? "intersection" : "union";
}

/**
 * Complexes indexed by the proper flats K(M) of a matroid, all on one
 * ambient vertex set. complexes()[i] belongs to flats()[i].
 */
class FlatFamily {
 public:
  static FlatFamily build(Matroid m, FamilyMode mode,
                          const std::function<SimplicialComplex(const VertexSet&)>& make) {
    auto flats = flat_lattice(m).proper;
    std::vector<SimplicialComplex> cs;
    cs.reserve(flats.size());
    for (const auto& k : flats) cs.push_back(make(k));
    return FlatFamily(std::move(m), mode, std::move(flats), std::move(cs));
  }

  static FlatFamily from_map(Matroid m, FamilyMode mode,
                             const std::map<VertexSet, SimplicialComplex>& assignment) {
    auto flats = flat_lattice(m).proper;
    std::vector<SimplicialComplex> cs;
    for (const auto& k : flats) {
      auto it = assignment.find(k);
      if (it == assignment.end()) throw InputError("flat family has no complex for flat " + k.str());
      cs.push_back(it->second);
    }
    return FlatFamily(std::move(m), mode, std::move(flats), std::move(cs));
  }

  const Matroid& matroid() const noexcept { return matroid_; }
  FamilyMode mode() const noexcept { return mode_; }
  const std::vector<VertexSet>& flats() const noexcept { return flats_; }
  const std::vector<SimplicialComplex>& complexes() const noexcept { return complexes_; }

  const SimplicialComplex& at(const VertexSet& k) const {
    auto it = std::lower_bound(flats_.begin(), flats_.end(), k);
    if (it == flats_.end() || *it != k) throw InputError(k.str() + " is not a proper flat");
    return complexes_[it - flats_.begin()];
  }

 private:
  FlatFamily(Matroid m, FamilyMode mode, std::vector<VertexSet> flats,
             std::vector<SimplicialComplex> cs)
      : matroid_(std::move(m)), mode_(mode), flats_(std::move(flats)), complexes_(std::move(cs)) {
    for (const auto& c : complexes_)
      if (!complexes_.empty() && c.ambient() != complexes_.front().ambient())
        throw InputError("flat family complexes must share one ambient vertex set");
  }

  Matroid matroid_;
  FamilyMode mode_;
  std::vector<VertexSet> flats_;
  std::vector<SimplicialComplex> complexes_;
};

struct FamilyCheck {
  bool ok = true;
  std::optional<std::pair<VertexSet, VertexSet>> counterexample;
};

/// Checks the compatibility law of the family's mode on every pair of flats.
inline FamilyCheck validate_family(const FlatFamily& f) {
  const auto& ks = f.flats();
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i + 1; j < ks.size(); ++j) {
      const auto& a = f.complexes()[i];
      const auto& b = f.complexes()[j];
      const auto& meet = f.at(ks[i] & ks[j]);
      const bool law = f.mode() == FamilyMode::intersection ? complex_intersection(a, b) == meet
                                                            : complex_union(a, b) == meet;
      if (!law) return {false, std::pair{ks[i], ks[j]}};
    }
  return {};
}

/// h̃_*(Δ(K_0(M))).
inline BettiVector positive_flat_betti(const Matroid& m, const FieldSpec& field) {
  return reduced_betti(order_complex(flat_poset(flat_lattice(m).positive)), field);
}

/// h̃_*(Δ(K_0(M))), which must be concentrated in degree ρ(V) - 2.
inline BettiVector flat_order_betti(const Matroid& m, const FieldSpec& field) {
  if (m.rank() < 1) throw InputError("flat_order_betti needs a matroid of rank at least 1");
  auto b = positive_flat_betti(m, field);
  for (int d : b.support())
    if (d != m.rank() - 2)
      throw InternalError("homology of the flat order complex is not concentrated in degree " +
                          std::to_string(m.rank() - 2) + ": " + b.str());
  return b;
}

/// h̃_*(Δ(K_0(M/K))), the lattice factor attached to flat K.
inline BettiVector contraction_lattice_betti(const Matroid& m, const VertexSet& k,
                                             const FieldSpec& field) {
  return positive_flat_betti(contract(m, k), field);
}

/// h̃_*(Δ(K(M)_{>K})), the same factor read off the upper interval.
inline BettiVector upper_interval_betti(const Matroid& m, const VertexSet& k,
                                        const FieldSpec& field) {
  std::vector<VertexSet> above;
  for (const auto& f : flat_lattice(m).proper)
    if (k.is_subset_of(f) && f != k) above.push_back(f);
  return reduced_betti(order_complex(flat_poset(std::move(above))), field);
}

struct E1Contribution {
  VertexSet flat;
  std::size_t homology = 0;  // dim H_q(Y_K)
  std::size_t lattice = 0;   // dim h̃_{p-1}(Δ(K_0(M/K)))
  std::size_t product() const { return homology * lattice; }
};

struct E1Entry {
  int p = 0;
  int q = 0;
  std::size_t dim = 0;
  std::vector<E1Contribution> flats;
};

/**
 * Dimensions of the first page of the spectral sequence for the union of
 * an intersection-compatible flat family. Only nonzero entries are stored,
 * sorted by (p, q).
 */
struct E1Page {
  int rank = 0;
  std::vector<E1Entry> entries;

  std::size_t dim(int p, int q) const {
    for (const auto& e : entries)
      if (e.p == p && e.q == q) return e.dim;
    return 0;
  }

  std::int64_t euler() const {
    std::int64_t s = 0;
    for (const auto& e : entries) s += ((e.p + e.q) % 2 ? -1 : 1) * static_cast<std::int64_t>(e.dim);
    return s;
  }
};

/// E¹_{p,q} = ⊕_{ρ(K) = ρ(V)-p-1} H_q(Y_K) ⊗ h̃_{p-1}(Δ(K_0(M/K))), with
/// H_q unreduced.
inline E1Page e1_page(const FlatFamily& f, const FieldSpec& field, bool check_family = true) {
  if (f.mode() != FamilyMode::intersection)
    throw InputError("the E1 page is defined for intersection families");
  if (check_family) {
    auto chk = validate_family(f);
    if (!chk.ok)
      throw InputError("flat family violates the intersection law at " +
                       chk.counterexample->first.str() + ", " + chk.counterexample->second.str());
  }
  const Matroid& m = f.matroid();
  E1Page page;
  page.rank = m.rank();
  std::map<std::pair<int, int>, E1Entry> table;
  for (std::size_t i = 0; i < f.flats().size(); ++i) {
    const auto& k = f.flats()[i];
    const auto& yk = f.complexes()[i];
    if (yk.is_void()) throw InputError("E1 page: Y_K is void for K = " + k.str());
    const int p = page.rank - 1 - m.rank(k);
    const std::size_t lattice = contraction_lattice_betti(m, k, field)[p - 1];
    if (!lattice) continue;
    const auto h = unreduced_betti(yk, field);
    for (int q = 0; q < static_cast<int>(h.size()); ++q) {
      if (!h[q]) continue;
      auto& e = table[{p, q}];
      e.p = p;
      e.q = q;
      e.flats.push_back({k, h[q], lattice});
      e.dim += h[q] * lattice;
    }
  }
  for (auto& [key, e] : table) page.entries.push_back(std::move(e));
  return page;
}

struct EulerCheck {
  bool ok = false;
  std::int64_t page = 0;   // Σ (-1)^{p+q} dim E¹_{p,q}
  std::int64_t target = 0; // χ(∪ Y_K), unreduced
};

/// The page's Euler characteristic must equal that of the union it converges to.
inline EulerCheck euler_check(const E1Page& page, const FlatFamily& f, const FieldSpec& field) {
  if (f.complexes().empty()) throw InputError("euler_check: family is empty");
  SimplicialComplex y = f.complexes().front();
  for (const auto& c : f.complexes()) y = complex_union(y, c);
  EulerCheck r;
  r.page = page.euler();
  r.target = euler_characteristic(y, field);
  r.ok = r.page == r.target;
  return r;
}

struct NonvanishingFlat {
  int p = 0;
  VertexSet flat;
  std::size_t rank = 0;  // dim h̃_{p-1}(Z_K)
};

/// ⋂_K Z_K over the family.
inline SimplicialComplex family_intersection(const FlatFamily& f) {
  if (f.complexes().empty()) throw InputError("family is empty");
  SimplicialComplex r = f.complexes().front();
  for (const auto& c : f.complexes()) r = complex_intersection(r, c);
  return r;
}

/**
 * For a union-compatible family with ⋂ Z_K = {∅}, finds p and a flat K of
 * rank ρ(V) - p - 1 with h̃_{p-1}(Z_K) != 0. Search is by increasing p, then
 * canonical flat order. Not finding one is an internal error.
 */
inline NonvanishingFlat find_nonvanishing_flat(const FlatFamily& f, const FieldSpec& field,
                                               bool check_family = true) {
  if (f.mode() != FamilyMode::union_of)
    throw InputError("find_nonvanishing_flat needs a union family");
  if (check_family) {
    auto chk = validate_family(f);
    if (!chk.ok)
      throw HypothesisViolation("flat family violates the union law at " +
                                chk.counterexample->first.str() + ", " +
                                chk.counterexample->second.str());
  }
  if (!family_intersection(f).is_empty_complex())
    throw HypothesisViolation("the family's common intersection is not {∅}");
  const Matroid& m = f.matroid();
  const int r = m.rank();
  for (int p = 0; p <= r - 1; ++p)
    for (std::size_t i = 0; i < f.flats().size(); ++i) {
      if (m.rank(f.flats()[i]) != r - p - 1) continue;
      const std::size_t h = reduced_betti(f.complexes()[i], field)[p - 1];
      if (h) return {p, f.flats()[i], h};
    }
  throw InternalError("no flat with nonvanishing homology in the required degree");
}

}  // namespace leray
