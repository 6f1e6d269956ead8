#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "leray/error.hpp"
#include "leray/field.hpp"

namespace leray {

/**
 * Sparse column-major matrix with entries in `Field`.
 *
 * Each column is a list of (row, value) pairs sorted by row with no zero
 * values stored. Entries are always in canonical form for the field.
 */
template <class Field>
class ExactMatrix {
 public:
  using value_type = typename Field::value_type;
  using Entry = std::pair<std::size_t, value_type>;
  using Column = std::vector<Entry>;

  ExactMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), columns_(cols) {}

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const Column& column(std::size_t j) const { return columns_.at(j); }

  // Adds `v` to entry (i, j).
  void add_to(std::size_t i, std::size_t j, const value_type& v) {
    if (i >= rows_ || j >= cols()) throw InternalError("matrix index out of range");
    auto& col = columns_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const Entry& e, std::size_t r) { return e.first < r; });
    if (it != col.end() && it->first == i) {
      it->second = field_.add(it->second, v);
      if (field_.is_zero(it->second)) col.erase(it);
    } else if (!field_.is_zero(v)) {
      col.insert(it, {i, v});
    }
  }

  value_type at(std::size_t i, std::size_t j) const {
    const auto& col = columns_.at(j);
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const Entry& e, std::size_t r) { return e.first < r; });
    return it != col.end() && it->first == i ? it->second : field_.zero();
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
  }

  // this * rhs
  ExactMatrix multiply(const ExactMatrix& rhs) const {
    if (cols() != rhs.rows()) throw InputError("matrix product: dimension mismatch");
    ExactMatrix out(field_, rows_, rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      for (const auto& [k, b] : rhs.column(j))
        for (const auto& [i, a] : columns_[k]) out.add_to(i, j, field_.mul(a, b));
    return out;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::vector<Column> columns_;
};

namespace detail {

// out = a + factor * b over a prime field; both sorted by row.
inline void axpy_column(const PrimeField& f, const std::vector<std::pair<std::size_t, std::uint32_t>>& a,
                        std::uint32_t factor,
                        const std::vector<std::pair<std::size_t, std::uint32_t>>& b,
                        std::vector<std::pair<std::size_t, std::uint32_t>>& out) {
  out.clear();
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, f.mul(factor, j->second));
      ++j;
    } else {
      auto v = f.add(i->second, f.mul(factor, j->second));
      if (v) out.emplace_back(i->first, v);
      ++i;
      ++j;
    }
  }
}

}  // namespace detail

/**
 * Column reduction over GF(p) keyed on the lowest (largest-row) entry.
 * Returns the pivot row of every column that survives (rank = size).
 */
inline std::vector<std::size_t> reduce_columns(
    const PrimeField& f, std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> cols) {
  std::unordered_map<std::size_t, std::size_t> owner;  // pivot row -> column index
  std::vector<std::size_t> pivots;
  std::vector<std::pair<std::size_t, std::uint32_t>> scratch;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& c = cols[j];
    while (!c.empty()) {
      auto it = owner.find(c.back().first);
      if (it == owner.end()) break;
      const auto& pc = cols[it->second];
      auto factor = f.neg(f.mul(c.back().second, f.inv(pc.back().second)));
      detail::axpy_column(f, c, factor, pc, scratch);
      c.swap(scratch);
    }
    if (!c.empty()) {
      owner.emplace(c.back().first, j);
      pivots.push_back(c.back().first);
    }
  }
  return pivots;
}

inline std::size_t matrix_rank(const ExactMatrix<PrimeField>& m) {
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return reduce_columns(m.field(), std::move(cols)).size();
}

// Fraction-free (Bareiss) elimination after clearing denominators column by
// column, so every intermediate value is an integer minor.
inline std::size_t matrix_rank(const ExactMatrix<RationalField>& m) {
  using boost::multiprecision::cpp_int;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    cpp_int scale = 1;
    for (const auto& [i, v] : m.column(j)) scale = boost::multiprecision::lcm(scale, denominator(v));
    for (const auto& [i, v] : m.column(j)) a[i][j] = numerator(v) * (scale / denominator(v));
  }
  std::size_t rank = 0;
  cpp_int prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace leray
