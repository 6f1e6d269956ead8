#pragma once

#include <vector>

#include "leray/complex.hpp"
#include "leray/homology.hpp"
#include "support/oracle.hpp"

namespace fixtures {

using namespace leray;

inline VertexSet V(Vertex n) { return vertex_range(1, n); }

inline SimplicialComplex facets(Vertex n, std::vector<Simplex> fs) {
  return SimplicialComplex::from_facets(V(n), fs);
}

inline SimplicialComplex boundary_triangle() { return facets(3, {{1, 2}, {2, 3}, {1, 3}}); }

inline SimplicialComplex rp2() {
  return facets(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                    {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

// ({1} ⊔ {2}) * Δ_{3,4}
inline SimplicialComplex colorful() { return facets(4, {{1, 3, 4}, {2, 3, 4}}); }

inline SimplicialComplex two_edges() { return facets(4, {{1, 2}, {3, 4}}); }

// Vertices 1..n map to bits 0..n-1.
inline oracle::Faces to_oracle(const SimplicialComplex& x) {
  oracle::Faces out;
  for (const auto& f : x.faces()) {
    std::uint32_t m = 0;
    for (Vertex v : f) m |= 1u << (v - 1);
    out.insert(m);
  }
  return out;
}

inline std::vector<std::size_t> ranks(const BettiVector& b) {
  std::vector<std::size_t> r;
  for (int d = -1; d <= b.top_degree(); ++d) r.push_back(b[d]);
  return r;
}

inline std::vector<std::size_t> ranks(const std::vector<int>& b) { return {b.begin(), b.end()}; }

}  // namespace fixtures
