#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include "leray/error.hpp"

namespace leray {

using Vertex = std::uint32_t;

// Bit encoding of a subset of a small ordered vertex set; bit i stands for
// the i-th smallest vertex.
using Mask = std::uint32_t;

inline constexpr int kMaxMaskVertices = 24;

/**
 * A finite set of vertices, kept sorted ascending and duplicate free.
 *
 * Doubles as a face of a complex and as a plain vertex subset. The empty
 * simplex has dimension -1. Ordering is lexicographic on the sorted vertex
 * lists, which is the canonical face order used everywhere.
 */
class Simplex {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vs) : v_(vs) { normalize(); }
  explicit Simplex(std::vector<Vertex> vs) : v_(std::move(vs)) { normalize(); }

  std::size_t size() const noexcept { return v_.size(); }
  int dim() const noexcept { return static_cast<int>(v_.size()) - 1; }
  bool empty() const noexcept { return v_.empty(); }
  const_iterator begin() const noexcept { return v_.begin(); }
  const_iterator end() const noexcept { return v_.end(); }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  const std::vector<Vertex>& vertices() const noexcept { return v_; }

  bool contains(Vertex x) const { return std::binary_search(v_.begin(), v_.end(), x); }
  bool is_subset_of(const Simplex& o) const {
    return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
  }
  bool is_disjoint_from(const Simplex& o) const {
    auto a = v_.begin();
    auto b = o.v_.begin();
    while (a != v_.end() && b != o.v_.end()) {
      if (*a == *b) return false;
      if (*a < *b) ++a; else ++b;
    }
    return true;
  }

  // Copy with the i-th vertex removed (a codimension-one face).
  Simplex without_index(std::size_t i) const {
    Simplex r;
    r.v_.reserve(v_.size() - 1);
    for (std::size_t j = 0; j < v_.size(); ++j)
      if (j != i) r.v_.push_back(v_[j]);
    return r;
  }

  Simplex with(Vertex x) const {
    Simplex r = *this;
    auto it = std::lower_bound(r.v_.begin(), r.v_.end(), x);
    if (it == r.v_.end() || *it != x) r.v_.insert(it, x);
    return r;
  }

  friend Simplex operator|(const Simplex& a, const Simplex& b) {
    Simplex r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.v_));
    return r;
  }
  friend Simplex operator&(const Simplex& a, const Simplex& b) {
    Simplex r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.v_));
    return r;
  }
  friend Simplex operator-(const Simplex& a, const Simplex& b) {
    Simplex r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.v_));
    return r;
  }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    return a.v_ <=> b.v_;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v_[i]);
    }
    return s + "}";
  }

  // Subset of this set selected by the bits of `m`.
  Simplex subset(Mask m) const {
    Simplex r;
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (m >> i & 1u) r.v_.push_back(v_[i]);
    return r;
  }

  // Encoding of `sub` relative to this set. `sub` must be a subset.
  Mask mask_of(const Simplex& sub) const {
    Mask m = 0;
    auto it = v_.begin();
    for (Vertex x : sub) {
      it = std::lower_bound(it, v_.end(), x);
      if (it == v_.end() || *it != x)
        throw InputError("vertex " + std::to_string(x) + " is not in " + str());
      m |= Mask{1} << (it - v_.begin());
    }
    return m;
  }

 private:
  void normalize() {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }

  std::vector<Vertex> v_;
};

// A vertex subset; same representation as a face.
using VertexSet = Simplex;

inline std::ostream& operator<<(std::ostream& os, const Simplex& s) { return os << s.str(); }

// {lo, lo+1, ..., hi}
inline VertexSet vertex_range(Vertex lo, Vertex hi) {
  std::vector<Vertex> v;
  for (Vertex x = lo; x <= hi; ++x) v.push_back(x);
  return VertexSet(std::move(v));
}

// Size first, then lexicographic. Used where the smallest witness is wanted.
struct SizeThenLex {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline void require_mask_width(const VertexSet& ground, int limit = kMaxMaskVertices) {
  if (static_cast<int>(ground.size()) > limit)
    throw InputError("vertex set of size " + std::to_string(ground.size()) +
                     " exceeds the enumeration limit " + std::to_string(limit));
}

}  // namespace leray
