#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "leray/complex.hpp"
#include "leray/error.hpp"
#include "leray/field.hpp"
#include "leray/flat_spectral.hpp"
#include "leray/homology.hpp"
#include "leray/leray.hpp"
#include "leray/matroid.hpp"
#include "leray/nerve.hpp"
#include "leray/poset.hpp"

namespace leray {

/// h(F): least h >= 1 such that for every subfamily G, if all members of G
/// of size <= h meet then G meets.
inline int helly_number(const SetFamily& family) {
  const std::size_t m = family.size();
  if (m == 0) throw InputError("Helly number of an empty family");
  if (m > 20) throw InputError("Helly number: family too large for exhaustive search");
  const Mask full = static_cast<Mask>((std::uint64_t{1} << m) - 1);
  std::vector<char> meets(std::size_t{full} + 1, 0);
  // smallest[G] = size of the smallest sub-subfamily of G with empty
  // intersection (infinity if none).
  constexpr int kNone = std::numeric_limits<int>::max();
  std::vector<int> smallest(std::size_t{full} + 1, kNone);
  std::vector<VertexSet> common(std::size_t{full} + 1);
  meets[0] = 1;
  for (Mask g = 1;; ++g) {
    const int low = std::countr_zero(g);
    const Mask rest = g & (g - 1);
    common[g] = rest ? (common[rest] & family.set(low)) : family.set(low);
    meets[g] = !common[g].empty();
    int s = meets[g] ? kNone : std::popcount(g);
    for (Mask bits = g; bits; bits &= bits - 1) s = std::min(s, smallest[g & ~(bits & -bits)]);
    smallest[g] = s;
    if (g == full) break;
  }
  for (int h = 1; h <= static_cast<int>(m); ++h) {
    bool works = true;
    for (Mask g = 1; works; ++g) {
      const bool premise = smallest[g] > h;
      if (premise && !meets[g]) works = false;
      if (g == full) break;
    }
    if (works) return h;
  }
  throw InternalError("Helly number exceeds the family size");
}

/**
 * Inputs of the relative colorful Helly statement: Y^∨ ⊆ M ⊆ X on one
 * vertex set, with a fixed coefficient field for L_Y(X).
 */
class HellyInstance {
 public:
  HellyInstance(SimplicialComplex x, SimplicialComplex y, Matroid m, FieldSpec field)
      : x_(std::move(x)), y_(std::move(y)), m_(std::move(m)), field_(field) {
    if (x_.ambient() != y_.ambient() || x_.ambient() != m_.ground())
      throw InputError("X, Y and M must share one vertex set");
    if (y_.is_void()) throw InputError("Y must not be void");
    const auto indep = m_.independents();
    for (const auto& f : indep.faces())
      if (!x_.contains(f))
        throw HypothesisViolation("M is not contained in X: independent set " + f.str() +
                                  " is not a face of X");
    const auto y_dual = alexander_dual(y_);
    for (const auto& f : y_dual.faces())
      if (!indep.contains(f))
        throw HypothesisViolation("Y^∨ is not contained in M: " + f.str() +
                                  " is in Y^∨ but not independent");
  }

  const SimplicialComplex& x() const noexcept { return x_; }
  const SimplicialComplex& y() const noexcept { return y_; }
  const Matroid& matroid() const noexcept { return m_; }
  const FieldSpec& field() const noexcept { return field_; }
  const VertexSet& vertices() const noexcept { return x_.ambient(); }

 private:
  SimplicialComplex x_, y_;
  Matroid m_;
  FieldSpec field_;
};

struct Witness {
  Simplex sigma;
  int rank_value = 0;  // ρ_M(V \ σ)
  int bound = 0;       // L_Y(X)
};

/// Scans X in (size, lex) order for the first σ with ρ_M(V \ σ) <= L_Y(X).
inline Witness verify_rtch_exhaustive(const HellyInstance& inst) {
  const int bound = relative_leray(inst.x(), inst.y(), inst.field()).value;
  auto faces = inst.x().faces();
  std::stable_sort(faces.begin(), faces.end(), SizeThenLex{});
  for (const auto& s : faces) {
    const int r = inst.matroid().rank(inst.vertices() - s);
    if (r <= bound) return {s, r, bound};
  }
  throw InternalError("no face of X satisfies the rank bound " + std::to_string(bound) +
                      "; X = " + inst.x().str() + ", Y = " + inst.y().str());
}

/// The absolute case: Y is the full simplex, so L_Y(X) = L(X).
inline Witness verify_tmchelly(const Matroid& m, const SimplicialComplex& x, const FieldSpec& field) {
  return verify_rtch_exhaustive(
      HellyInstance(x, SimplicialComplex::full_simplex(x.ambient()), m, field));
}

/**
 * Colorful version for a partition of V into blocks: when X contains the
 * join of the blocks and there are more blocks than L(X), some block is a
 * face of X. Returns the smallest such 1-based block index.
 */
inline int verify_colorful(const SimplicialComplex& x, const std::vector<VertexSet>& blocks,
                           const FieldSpec& field) {
  VertexSet covered;
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw InputError("colorful: blocks must be nonempty");
    covered = covered | b;
    total += b.size();
  }
  if (covered != x.ambient() || total != covered.size())
    throw InputError("colorful: blocks must partition the vertex set " + x.ambient().str());
  const auto colorful_faces = partition_matroid(blocks).independents();
  for (const auto& f : colorful_faces.faces())
    if (!x.contains(f))
      throw HypothesisViolation("colorful: X does not contain the join of the blocks; missing " + f.str());
  const int l = leray_number(x, field).value;
  if (static_cast<int>(blocks.size()) < l + 1)
    throw HypothesisViolation("colorful: " + std::to_string(blocks.size()) +
                              " blocks do not exceed L(X) = " + std::to_string(l));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (x.contains(blocks[i])) return static_cast<int>(i) + 1;
  throw InternalError("colorful: no block is a face of X although the hypotheses hold");
}

/**
 * The complexes Z_K = Δ(X^∨ \ X^∨[K]) for a fixed X, on a common vertex set:
 * vertex i stands for the i-th nonempty face of X^∨ in canonical order.
 */
class ZkConstruction {
 public:
  explicit ZkConstruction(SimplicialComplex x) : x_(std::move(x)), dual_(alexander_dual(x_)) {
    for (const auto& f : dual_.faces())
      if (!f.empty()) nodes_.push_back(f);
    ambient_ = nodes_.empty() ? VertexSet{} : vertex_range(0, static_cast<Vertex>(nodes_.size() - 1));
  }

  const SimplicialComplex& x() const noexcept { return x_; }
  const SimplicialComplex& x_dual() const noexcept { return dual_; }
  const std::vector<Simplex>& nodes() const noexcept { return nodes_; }
  const VertexSet& ambient() const noexcept { return ambient_; }

  SimplicialComplex z(const VertexSet& k) const {
    return chains_of([&](const Simplex& s) { return !s.is_subset_of(k); });
  }

  // sd(X^∨[V \ K]) in the same vertex labels.
  SimplicialComplex subdivided_complement(const VertexSet& k) const {
    return chains_of([&](const Simplex& s) { return s.is_disjoint_from(k); });
  }

  // σ ↦ σ \ K maps every chain of Z_K onto a chain of sd(X^∨[V \ K]), and
  // sd(X^∨[V \ K]) sits inside Z_K.
  bool retraction_is_simplicial(const VertexSet& k) const {
    const auto zk = z(k);
    const auto sd = subdivided_complement(k);
    if (!sd.is_subcomplex_of(zk)) return false;
    for (const auto& chain : zk.faces()) {
      std::vector<Vertex> image;
      for (Vertex v : chain) {
        const Simplex moved = nodes_[v] - k;
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), moved);
        if (moved.empty() || it == nodes_.end() || *it != moved) return false;
        image.push_back(static_cast<Vertex>(it - nodes_.begin()));
      }
      if (!sd.contains(Simplex(std::move(image)))) return false;
    }
    return true;
  }

 private:
  template <class Keep>
  SimplicialComplex chains_of(Keep keep) const {
    std::vector<Vertex> global;
    std::vector<Simplex> kept;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (keep(nodes_[i])) {
        global.push_back(static_cast<Vertex>(i));
        kept.push_back(nodes_[i]);
      }
    auto local = order_complex(Poset<Simplex>::from_predicate(
        std::move(kept), [](const Simplex& a, const Simplex& b) { return a.is_subset_of(b); }, false));
    std::vector<Simplex> faces;
    faces.reserve(local.size());
    for (const auto& f : local.faces()) {
      std::vector<Vertex> g;
      g.reserve(f.size());
      for (Vertex v : f) g.push_back(global[v]);
      faces.emplace_back(std::move(g));
    }
    return SimplicialComplex::from_closed_faces(ambient_, std::move(faces));
  }

  SimplicialComplex x_, dual_;
  std::vector<Simplex> nodes_;
  VertexSet ambient_;
};

/// Z_K = Δ(X^∨ \ X^∨[K]), labelled as in ZkConstruction.
inline SimplicialComplex zk_complex(const SimplicialComplex& x, const VertexSet& k) {
  return ZkConstruction(x).z(k);
}

/// The union-compatible family {Z_K} over the proper flats of M*.
inline FlatFamily zk_family(const ZkConstruction& c, const Matroid& m) {
  return FlatFamily::build(dual(m), FamilyMode::union_of, [&](const VertexSet& k) { return c.z(k); });
}

/// Its Alexander dual, {Z_K^∨}, which is intersection-compatible.
inline FlatFamily dualized_zk_family(const ZkConstruction& c, const Matroid& m) {
  return FlatFamily::build(dual(m), FamilyMode::intersection,
                           [&](const VertexSet& k) { return alexander_dual(c.z(k)); });
}

struct ConstructiveResult {
  Witness witness;
  int p = -1;                       // -1 when X is the full simplex (no flats needed)
  std::vector<std::string> checks;  // identities verified along the way
};

/**
 * Replays the topological proof: dual matroid, Z_K family, a flat from the
 * nonvanishing search, and the chain of rank identities leading to
 * ρ_M(V \ K) <= L_Y(X). Every identity is recomputed; a failure throws
 * InternalError.
 */
inline ConstructiveResult rtch_constructive(const HellyInstance& inst) {
  const auto& x = inst.x();
  const auto& m = inst.matroid();
  const auto& v = inst.vertices();
  const auto& field = inst.field();
  const int bound = link_leray(x, inst.y(), field).value;
  const int n = static_cast<int>(v.size());
  ConstructiveResult out;
  auto fail = [&](const std::string& what) {
    throw InternalError("constructive check failed: " + what + "; X = " + x.str() +
                        ", Y = " + inst.y().str());
  };

  if (x.is_full_simplex()) {
    // X^∨ is void, every Z_K is {∅} while X^∨[V\K] is void, so the homotopy
    // step fails and the flat search proves nothing. Every face of Y lies in
    // X; take the first one meeting the bound, else fall back to σ = V,
    // which is in X but may be outside Y.
    auto faces = inst.y().faces();
    std::stable_sort(faces.begin(), faces.end(), SizeThenLex{});
    for (const auto& s : faces)
      if (m.rank(v - s) <= bound) {
        out.witness = {s, m.rank(v - s), bound};
        out.checks.push_back("X is the full simplex: sigma taken from Y directly");
        return out;
      }
    out.witness = {v, m.rank(VertexSet{}), bound};
    out.checks.push_back("X is the full simplex and no face of Y meets the bound: sigma = V, not in Y");
    return out;
  }

  const Matroid mstar = dual(m);
  const int rstar = mstar.rank();
  for (Mask a = 0;; ++a) {
    const int lhs = mstar.rank_mask(a);
    const int rhs = std::popcount(a) - m.rank() + m.rank_mask(m.full_mask() & ~a);
    if (lhs != rhs) fail("dual rank formula at " + v.subset(a).str());
    if (a == m.full_mask()) break;
  }
  out.checks.push_back("dual rank formula");

  const ZkConstruction zc(x);
  const FlatFamily family = zk_family(zc, m);
  if (!family_intersection(family).is_empty_complex()) fail("intersection of Z_K is not {∅}");
  out.checks.push_back("intersection of Z_K is {∅}");

  const NonvanishingFlat found = find_nonvanishing_flat(family, field, false);
  const VertexSet& k = found.flat;
  const int p = found.p;
  const VertexSet rest = v - k;
  const int kz = static_cast<int>(k.size());

  if (mstar.rank(k) != rstar - p - 1) fail("dual rank equation for K = " + k.str());
  if (m.rank(rest) != n - kz - p - 1) fail("primal rank equation for K = " + k.str());
  out.checks.push_back("rank equations (dual and primal forms)");

  if (!inst.y().contains(k)) fail("K = " + k.str() + " is not in Y");
  out.checks.push_back("K in Y");

  const auto zk = family.at(k);
  const auto complement = induced(zc.x_dual(), rest);
  const auto bz = reduced_betti(zk, field);
  const auto bc = reduced_betti(complement, field);
  if (!bz.same_ranks(bc)) fail("Betti(Z_K) != Betti(X^∨[V\\K]) for K = " + k.str());
  if (!zc.retraction_is_simplicial(k)) fail("retraction is not simplicial for K = " + k.str());
  out.checks.push_back("Z_K and X^∨[V\\K] have equal Betti numbers");

  const auto lk = link(x, k);
  if (alexander_dual(lk) != complement) fail("X^∨[V\\K] is not the dual of lk(X,K)");
  const int degree = n - kz - p - 2;
  const std::size_t lk_rank = reduced_betti(lk, field)[degree];
  if (lk_rank != bc[p - 1] || lk_rank == 0) fail("Alexander duality step for K = " + k.str());
  if (degree != m.rank(rest) - 1) fail("degree bookkeeping for K = " + k.str());
  out.checks.push_back("Alexander duality to lk(X,K)");

  if (!x.contains(k)) fail("K = " + k.str() + " is not a face of X");
  const int r = m.rank(rest);
  if (r > bound) fail("rank " + std::to_string(r) + " exceeds the link bound " + std::to_string(bound));
  if (relative_leray(x, inst.y(), field).value != bound)
    fail("link-based and deletion-based relative Leray numbers differ");
  out.checks.push_back("K in X and rank within the link-based bound, which equals L_Y(X)");

  out.witness = {k, r, bound};
  out.p = p;
  return out;
}

}  // namespace leray
