#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "leray/complex.hpp"
#include "leray/error.hpp"
#include "leray/field.hpp"
#include "leray/matrix.hpp"

namespace leray {

/**
 * Ranks of reduced homology h̃_i(X; F) for i >= -1.
 *
 * Degrees outside the stored range read as zero. The void complex has all
 * ranks zero; {∅} has rank one in degree -1 only.
 */
class BettiVector {
 public:
  explicit BettiVector(FieldSpec field) : field_(field) {}
  BettiVector(FieldSpec field, std::vector<std::size_t> ranks_from_minus_one)
      : field_(field), ranks_(std::move(ranks_from_minus_one)) {
    trim();
  }

  const FieldSpec& field() const noexcept { return field_; }

  std::size_t operator[](int degree) const {
    const int idx = degree + 1;
    return idx >= 0 && idx < static_cast<int>(ranks_.size()) ? ranks_[idx] : 0;
  }

  // Highest degree with nonzero rank, or -2 when everything vanishes.
  int top_degree() const noexcept { return static_cast<int>(ranks_.size()) - 2; }
  bool is_zero() const noexcept { return ranks_.empty(); }

  // Σ (-1)^i h̃_i
  std::int64_t euler() const {
    std::int64_t e = 0;
    for (int i = -1; i <= top_degree(); ++i)
      e += ((i % 2 == 0) ? 1 : -1) * static_cast<std::int64_t>((*this)[i]);
    return e;
  }

  // Nonzero degrees only.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = -1; i <= top_degree(); ++i)
      if ((*this)[i]) s.push_back(i);
    return s;
  }

  // Ranks are compared; the field is not.
  bool same_ranks(const BettiVector& o) const { return ranks_ == o.ranks_; }
  friend bool operator==(const BettiVector& a, const BettiVector& b) {
    return a.field_ == b.field_ && a.ranks_ == b.ranks_;
  }

  std::string str() const {
    std::string s = field_.name() + "[";
    for (int i = -1; i <= top_degree(); ++i) {
      if (i > -1) s += " ";
      s += std::to_string((*this)[i]);
    }
    return s + "]";
  }

 private:
  void trim() {
    while (!ranks_.empty() && ranks_.back() == 0) ranks_.pop_back();
  }

  FieldSpec field_;
  std::vector<std::size_t> ranks_;
};

namespace detail {

// Faces grouped by dimension, each group in canonical order.
struct GradedFaces {
  int top = -2;
  std::vector<std::vector<Simplex>> by_dim;  // index k + 1

  explicit GradedFaces(const SimplicialComplex& x) : top(x.dimension()) {
    by_dim.resize(std::max(0, top + 2));
    for (const auto& f : x.faces()) by_dim[f.size()].push_back(f);
  }

  const std::vector<Simplex>& of_dim(int k) const {
    static const std::vector<Simplex> none;
    return k >= -1 && k <= top ? by_dim[k + 1] : none;
  }

  std::size_t index_of(const Simplex& s) const {
    const auto& v = of_dim(s.dim());
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end() || *it != s) throw InternalError("face " + s.str() + " missing from its complex");
    return static_cast<std::size_t>(it - v.begin());
  }
};

template <class Field>
std::vector<std::pair<std::size_t, typename Field::value_type>> boundary_column(
    const GradedFaces& g, const Simplex& f, const Field& field) {
  std::vector<std::pair<std::size_t, typename Field::value_type>> col;
  col.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    col.emplace_back(g.index_of(f.without_index(i)), field.from_int(i % 2 == 0 ? 1 : -1));
  std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return col;
}

inline std::vector<std::size_t> face_counts(const GradedFaces& g) {
  std::vector<std::size_t> c;
  for (const auto& v : g.by_dim) c.push_back(v.size());
  return c;
}

// rank of ∂_k for k = 0..top, reduced from the top down with clearing.
inline std::vector<std::size_t> boundary_ranks(const GradedFaces& g, const PrimeField& f) {
  std::vector<std::size_t> rank(std::max(0, g.top + 2), 0);
  std::vector<char> cleared;
  for (int k = g.top; k >= 0; --k) {
    const auto& faces = g.of_dim(k);
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> cols;
    cols.reserve(faces.size());
    for (std::size_t j = 0; j < faces.size(); ++j)
      if (cleared.empty() || !cleared[j]) cols.push_back(boundary_column(g, faces[j], f));
    auto pivots = reduce_columns(f, std::move(cols));
    rank[k] = pivots.size();
    cleared.assign(g.of_dim(k - 1).size(), 0);
    for (auto r : pivots) cleared[r] = 1;
  }
  return rank;
}

inline std::vector<std::size_t> boundary_ranks(const GradedFaces& g, const RationalField& f) {
  std::vector<std::size_t> rank(std::max(0, g.top + 2), 0);
  for (int k = g.top; k >= 0; --k) {
    const auto& faces = g.of_dim(k);
    ExactMatrix<RationalField> m(f, g.of_dim(k - 1).size(), faces.size());
    for (std::size_t j = 0; j < faces.size(); ++j)
      for (const auto& [i, v] : boundary_column(g, faces[j], f)) m.add_to(i, j, v);
    rank[k] = matrix_rank(m);
  }
  return rank;
}

}  // namespace detail

/// Matrix of ∂_k from k-faces (columns) to (k-1)-faces (rows), both in
/// canonical order. ∂_0 is the augmentation onto the empty face.
template <class Field>
ExactMatrix<Field> boundary_matrix(const SimplicialComplex& x, int k, const Field& field) {
  if (x.is_void()) throw InputError("boundary matrix of the void complex");
  if (k < -1 || k > x.dimension() + 1)
    throw InputError("boundary degree " + std::to_string(k) + " out of range");
  detail::GradedFaces g(x);
  const auto& faces = g.of_dim(k);
  ExactMatrix<Field> m(field, g.of_dim(k - 1).size(), faces.size());
  for (std::size_t j = 0; j < faces.size(); ++j)
    for (const auto& [i, v] : detail::boundary_column(g, faces[j], field)) m.add_to(i, j, v);
  return m;
}

/// h̃_*(X; F) via dim h̃_k = #k-faces - rank ∂_k - rank ∂_{k+1}.
inline BettiVector reduced_betti(const SimplicialComplex& x, const FieldSpec& field) {
  if (x.is_void()) return BettiVector(field);
  detail::GradedFaces g(x);
  auto counts = detail::face_counts(g);
  auto rank = field.visit([&](const auto& f) { return detail::boundary_ranks(g, f); });
  std::vector<std::size_t> betti(counts.size());
  for (int k = -1; k <= g.top; ++k) {
    const std::size_t in = k >= 0 ? rank[k] : 0;
    const std::size_t out = k + 1 <= g.top ? rank[k + 1] : 0;
    if (counts[k + 1] < in + out) throw InternalError("negative Betti number");
    betti[k + 1] = counts[k + 1] - in - out;
  }
  return BettiVector(field, std::move(betti));
}

/// Unreduced ranks H_q(X; F), q >= 0. Empty for void and {∅}.
inline std::vector<std::size_t> unreduced_betti(const SimplicialComplex& x, const FieldSpec& field) {
  if (x.is_void() || x.is_empty_complex()) return {};
  auto b = reduced_betti(x, field);
  std::vector<std::size_t> h(std::max(1, b.top_degree() + 1));
  for (int q = 0; q < static_cast<int>(h.size()); ++q) h[q] = b[q];
  h[0] += 1;
  return h;
}

/// Σ (-1)^q dim H_q(X), i.e. the ordinary Euler characteristic.
inline std::int64_t euler_characteristic(const SimplicialComplex& x, const FieldSpec& field) {
  std::int64_t e = 0;
  auto h = unreduced_betti(x, field);
  for (std::size_t q = 0; q < h.size(); ++q) e += (q % 2 ? -1 : 1) * static_cast<std::int64_t>(h[q]);
  return e;
}

// Over a field cohomology and homology ranks agree; named for duality statements.
inline std::size_t cohomology_rank(const SimplicialComplex& x, int q, const FieldSpec& field) {
  return reduced_betti(x, field)[q];
}

}  // namespace leray
