#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "leray/error.hpp"
#include "leray/simplex.hpp"

namespace leray {

/**
 * A finite abstract simplicial complex over an explicit ambient vertex set.
 *
 * Faces are kept in canonical (lexicographic) order. Two degenerate values
 * are distinct: the void complex has no faces at all, the empty complex
 * {∅} has only the empty face. The ambient set matters for Alexander
 * duality and may contain vertices that span no face.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex void_complex(VertexSet ambient) {
    SimplicialComplex x;
    x.ambient_ = std::move(ambient);
    return x;
  }

  static SimplicialComplex empty_complex(VertexSet ambient) {
    SimplicialComplex x;
    x.ambient_ = std::move(ambient);
    x.faces_.emplace_back();
    return x;
  }

  static SimplicialComplex full_simplex(VertexSet ambient) {
    require_mask_width(ambient);
    SimplicialComplex x;
    const Mask n = Mask{1} << ambient.size();
    x.faces_.reserve(n);
    for (Mask m = 0; m < n; ++m) x.faces_.push_back(ambient.subset(m));
    x.ambient_ = std::move(ambient);
    x.canonicalize();
    return x;
  }

  // Downward closure of `facets`. With no facets the result is void, or {∅}
  // when `include_empty` is set.
  static SimplicialComplex from_facets(VertexSet ambient, const std::vector<Simplex>& facets,
                                       bool include_empty = false) {
    SimplicialComplex x;
    for (const auto& f : facets) {
      if (!f.is_subset_of(ambient))
        throw InputError("facet " + f.str() + " uses a vertex outside the ambient set " +
                         ambient.str());
      require_mask_width(f);
      const Mask n = Mask{1} << f.size();
      for (Mask m = 0; m < n; ++m) x.faces_.push_back(f.subset(m));
    }
    if (include_empty) x.faces_.emplace_back();
    x.ambient_ = std::move(ambient);
    x.canonicalize();
    return x;
  }

  // Takes an explicit face list and checks that it is downward closed.
  static SimplicialComplex from_faces(VertexSet ambient, std::vector<Simplex> faces) {
    auto x = from_closed_faces(std::move(ambient), std::move(faces));
    for (const auto& f : x.faces_) {
      if (!f.is_subset_of(x.ambient_))
        throw InputError("face " + f.str() + " uses a vertex outside the ambient set");
      for (std::size_t i = 0; i < f.size(); ++i)
        if (!x.contains(f.without_index(i)))
          throw InputError("face list is not downward closed: " + f.str() + " lacks " +
                           f.without_index(i).str());
    }
    return x;
  }

  // Unchecked variant for constructions that are closed by design.
  static SimplicialComplex from_closed_faces(VertexSet ambient, std::vector<Simplex> faces) {
    SimplicialComplex x;
    x.ambient_ = std::move(ambient);
    x.faces_ = std::move(faces);
    x.canonicalize();
    return x;
  }

  const VertexSet& ambient() const noexcept { return ambient_; }
  const std::vector<Simplex>& faces() const noexcept { return faces_; }
  std::size_t size() const noexcept { return faces_.size(); }

  bool is_void() const noexcept { return faces_.empty(); }
  bool is_empty_complex() const noexcept { return faces_.size() == 1 && faces_[0].empty(); }
  bool is_full_simplex() const { return contains(ambient_); }

  bool contains(const Simplex& s) const {
    return std::binary_search(faces_.begin(), faces_.end(), s);
  }

  // -1 for {∅}; -2 for the void complex.
  int dimension() const noexcept {
    int d = -2;
    for (const auto& f : faces_) d = std::max(d, f.dim());
    return d;
  }

  // Faces of dimension k, in canonical order.
  std::vector<Simplex> faces_of_dim(int k) const {
    std::vector<Simplex> r;
    for (const auto& f : faces_)
      if (f.dim() == k) r.push_back(f);
    return r;
  }

  std::size_t count_of_dim(int k) const {
    return static_cast<std::size_t>(
        std::count_if(faces_.begin(), faces_.end(), [k](const Simplex& f) { return f.dim() == k; }));
  }

  // Inclusion-maximal faces.
  std::vector<Simplex> facets() const {
    std::vector<Simplex> r;
    for (const auto& f : faces_) {
      bool maximal = true;
      for (Vertex v : ambient_) {
        if (!f.contains(v) && contains(f.with(v))) {
          maximal = false;
          break;
        }
      }
      if (maximal) r.push_back(f);
    }
    return r;
  }

  bool is_subcomplex_of(const SimplicialComplex& o) const {
    return std::includes(o.faces_.begin(), o.faces_.end(), faces_.begin(), faces_.end());
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  std::string str() const {
    if (is_void()) return "void";
    std::string s = "[";
    auto fs = facets();
    for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? " " : "") + fs[i].str();
    return s + "]";
  }

 private:
  void canonicalize() {
    std::sort(faces_.begin(), faces_.end());
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  }

  VertexSet ambient_;
  std::vector<Simplex> faces_;
};

/// X[S]: the faces of X contained in S, on ambient S.
inline SimplicialComplex induced(const SimplicialComplex& x, const VertexSet& s) {
  if (!s.is_subset_of(x.ambient()))
    throw InputError("induced: " + s.str() + " is not contained in the ambient set " +
                     x.ambient().str());
  std::vector<Simplex> faces;
  for (const auto& f : x.faces())
    if (f.is_subset_of(s)) faces.push_back(f);
  return SimplicialComplex::from_closed_faces(s, std::move(faces));
}

/// str(X, tau) = {sigma in X : sigma ∪ tau in X}, on the ambient of X.
/// Void when tau is not a face.
inline SimplicialComplex star(const SimplicialComplex& x, const Simplex& tau) {
  if (!tau.is_subset_of(x.ambient()))
    throw InputError("star: " + tau.str() + " is not contained in the ambient set");
  std::vector<Simplex> faces;
  if (x.contains(tau))
    for (const auto& f : x.faces())
      if (x.contains(f | tau)) faces.push_back(f);
  return SimplicialComplex::from_closed_faces(x.ambient(), std::move(faces));
}

/// lk(X, tau): faces of the star disjoint from tau, on ambient V \ tau.
/// Void when tau is not a face.
inline SimplicialComplex link(const SimplicialComplex& x, const Simplex& tau) {
  if (!tau.is_subset_of(x.ambient()))
    throw InputError("link: " + tau.str() + " is not contained in the ambient set");
  std::vector<Simplex> faces;
  if (x.contains(tau))
    for (const auto& f : x.faces())
      if (f.is_disjoint_from(tau) && x.contains(f | tau)) faces.push_back(f);
  return SimplicialComplex::from_closed_faces(x.ambient() - tau, std::move(faces));
}

/// X1 * X2 on disjoint ambients.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (!a.ambient().is_disjoint_from(b.ambient()))
    throw InputError("join: ambient sets " + a.ambient().str() + " and " + b.ambient().str() +
                     " overlap");
  std::vector<Simplex> faces;
  faces.reserve(a.size() * b.size());
  for (const auto& f : a.faces())
    for (const auto& g : b.faces()) faces.push_back(f | g);
  return SimplicialComplex::from_closed_faces(a.ambient() | b.ambient(), std::move(faces));
}

/// X^∨ = {A ⊆ V : V \ A ∉ X}, on the same ambient V.
inline SimplicialComplex alexander_dual(const SimplicialComplex& x) {
  const VertexSet& v = x.ambient();
  require_mask_width(v);
  std::vector<Mask> present;
  present.reserve(x.size());
  for (const auto& f : x.faces()) present.push_back(v.mask_of(f));
  std::sort(present.begin(), present.end());
  const Mask full = static_cast<Mask>((std::uint64_t{1} << v.size()) - 1);
  std::vector<Simplex> faces;
  for (Mask a = 0;; ++a) {
    if (!std::binary_search(present.begin(), present.end(), full & ~a)) faces.push_back(v.subset(a));
    if (a == full) break;
  }
  return SimplicialComplex::from_closed_faces(v, std::move(faces));
}

inline void require_same_ambient(const SimplicialComplex& a, const SimplicialComplex& b,
                                 const char* what) {
  if (a.ambient() != b.ambient())
    throw InputError(std::string(what) + ": ambient sets " + a.ambient().str() + " and " +
                     b.ambient().str() + " differ");
}

inline SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  require_same_ambient(a, b, "union");
  std::vector<Simplex> faces;
  std::set_union(a.faces().begin(), a.faces().end(), b.faces().begin(), b.faces().end(),
                 std::back_inserter(faces));
  return SimplicialComplex::from_closed_faces(a.ambient(), std::move(faces));
}

inline SimplicialComplex complex_intersection(const SimplicialComplex& a,
                                              const SimplicialComplex& b) {
  require_same_ambient(a, b, "intersection");
  std::vector<Simplex> faces;
  std::set_intersection(a.faces().begin(), a.faces().end(), b.faces().begin(), b.faces().end(),
                        std::back_inserter(faces));
  return SimplicialComplex::from_closed_faces(a.ambient(), std::move(faces));
}

// Same faces, larger ambient set.
inline SimplicialComplex with_ambient(const SimplicialComplex& x, VertexSet ambient) {
  if (!x.ambient().is_subset_of(ambient))
    throw InputError("with_ambient: new ambient set must contain " + x.ambient().str());
  return SimplicialComplex::from_closed_faces(std::move(ambient), x.faces());
}

}  // namespace leray
