#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "leray/complex.hpp"
#include "leray/error.hpp"

namespace leray {

/**
 * A finite poset over labelled elements. Element i becomes vertex i of the
 * order complex, so labels only matter to the caller.
 */
template <class T>
class Poset {
 public:
  Poset() = default;

  // `pairs` lists (a, b) with a <= b by element index; reflexive pairs must
  // be present. The relation is validated as a partial order.
  static Poset from_relation(std::vector<T> elements,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    Poset p;
    const std::size_t n = elements.size();
    p.elements_ = std::move(elements);
    p.leq_.assign(n * n, false);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw InputError("poset relation refers to a missing element");
      p.leq_[a * n + b] = true;
    }
    p.validate();
    return p;
  }

  // Order given by a predicate `leq(x, y)`. Validation can be skipped for
  // relations that are partial orders by construction (inclusion).
  static Poset from_predicate(std::vector<T> elements,
                              const std::function<bool(const T&, const T&)>& leq,
                              bool check = true) {
    Poset p;
    const std::size_t n = elements.size();
    p.elements_ = std::move(elements);
    p.leq_.assign(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) p.leq_[a * n + b] = leq(p.elements_[a], p.elements_[b]);
    if (check) p.validate();
    return p;
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<T>& elements() const noexcept { return elements_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  // P_{>x} and P_{>=x}
  Poset strictly_above(std::size_t x) const { return filtered([&](std::size_t y) { return less(x, y); }); }
  Poset at_or_above(std::size_t x) const { return filtered([&](std::size_t y) { return leq(x, y); }); }

 private:
  template <class Pred>
  Poset filtered(Pred keep) const {
    std::vector<std::size_t> idx;
    for (std::size_t y = 0; y < size(); ++y)
      if (keep(y)) idx.push_back(y);
    Poset p;
    for (auto y : idx) p.elements_.push_back(elements_[y]);
    p.leq_.assign(idx.size() * idx.size(), false);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) p.leq_[a * idx.size() + b] = leq(idx[a], idx[b]);
    return p;
  }

  void validate() const {
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq(a, a)) throw InputError("poset relation is not reflexive at element " + std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq(a, b) && leq(b, a))
          throw InputError("poset relation is not antisymmetric: elements " + std::to_string(a) +
                           " and " + std::to_string(b));
        if (!leq(a, b)) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (leq(b, c) && !leq(a, c))
            throw InputError("poset relation is not transitive: " + std::to_string(a) + " <= " +
                             std::to_string(b) + " <= " + std::to_string(c));
      }
    }
  }

  std::vector<T> elements_;
  std::vector<bool> leq_;
};

/// Δ(P): chains of P as faces on vertices 0..|P|-1. Δ(∅) = {∅}.
template <class T>
SimplicialComplex order_complex(const Poset<T>& p) {
  const std::size_t n = p.size();
  std::vector<Simplex> faces;
  faces.emplace_back();
  // Chains are grown upward from each element; every chain is produced once
  // because its vertices are appended in increasing poset order.
  std::vector<std::vector<Vertex>> stack;
  for (std::size_t x = 0; x < n; ++x) stack.push_back({static_cast<Vertex>(x)});
  while (!stack.empty()) {
    auto chain = std::move(stack.back());
    stack.pop_back();
    const std::size_t top = chain.back();
    for (std::size_t y = 0; y < n; ++y) {
      if (p.less(top, y)) {
        auto next = chain;
        next.push_back(static_cast<Vertex>(y));
        stack.push_back(std::move(next));
      }
    }
    faces.emplace_back(std::move(chain));
  }
  VertexSet ambient = n ? vertex_range(0, static_cast<Vertex>(n - 1)) : VertexSet{};
  return SimplicialComplex::from_closed_faces(std::move(ambient), std::move(faces));
}

/// Face poset of the nonempty faces of X under inclusion.
inline Poset<Simplex> face_poset(const SimplicialComplex& x) {
  std::vector<Simplex> nonempty;
  for (const auto& f : x.faces())
    if (!f.empty()) nonempty.push_back(f);
  return Poset<Simplex>::from_predicate(
      std::move(nonempty), [](const Simplex& a, const Simplex& b) { return a.is_subset_of(b); },
      false);
}

/// sd(X) = Δ(X \ {∅}). Vertex i is the i-th nonempty face of X in canonical
/// order. sd({∅}) = {∅}.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& x) {
  if (x.is_void()) throw InputError("barycentric subdivision of the void complex is undefined");
  return order_complex(face_poset(x));
}

}  // namespace leray
