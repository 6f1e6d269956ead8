#include <gtest/gtest.h>

#include "leray/leray.hpp"
#include "leray/random.hpp"
#include "support/fixtures.hpp"

using namespace leray;
using namespace fixtures;

namespace {
const FieldSpec gf2 = FieldSpec::gf2();

SimplicialComplex full_on(const VertexSet& ambient, const VertexSet& a) {
  return SimplicialComplex::from_facets(ambient, {a}, true);
}
}  // namespace

TEST(Leray, Examples) {
  EXPECT_EQ(leray_number(SimplicialComplex::full_simplex(V(4)), gf2).value, 0);
  EXPECT_FALSE(leray_number(SimplicialComplex::full_simplex(V(4)), gf2).witness);

  const auto b = leray_number(boundary_triangle(), gf2);
  EXPECT_EQ(b.value, 2);
  ASSERT_TRUE(b.witness);
  EXPECT_EQ(b.witness->subset, V(3));
  EXPECT_EQ(b.witness->degree, 1);

  const auto t = leray_number(two_edges(), gf2);
  EXPECT_EQ(t.value, 1);
  EXPECT_EQ(t.witness->degree, 0);
  EXPECT_EQ(t.witness->subset, (VertexSet{1, 2, 3}));  // lex order, not size order

  EXPECT_EQ(leray_number(colorful(), gf2).value, 1);
  EXPECT_EQ(leray_number(rp2(), gf2).value, 3);
  EXPECT_EQ(leray_number(SimplicialComplex::empty_complex(V(2)), gf2).value, 0);
  EXPECT_THROW(leray_number(SimplicialComplex::void_complex(V(2)), gf2), InputError);
}

TEST(Leray, MatchesOracle) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Rng rng(51, i);
    const int n = rng.between(1, 6);
    const auto x = random_complex(rng, V(n), varied_profile(rng, n));
    const auto y = random_complex(rng, V(n), varied_profile(rng, n));
    for (std::uint32_t p : {2u, 3u}) {
      EXPECT_EQ(leray_number(x, FieldSpec::prime(p)).value, oracle::leray(to_oracle(x), n, p)) << x.str();
      EXPECT_EQ(relative_leray(x, y, FieldSpec::prime(p)).value,
                oracle::relative_leray(to_oracle(x), to_oracle(y), n, p));
    }
  }
}

TEST(RelativeLeray, Examples) {
  const auto x = boundary_triangle();
  const auto pt = SimplicialComplex::empty_complex(V(3));
  EXPECT_EQ(relative_leray(x, pt, gf2).value, 2);
  EXPECT_EQ(relative_leray(x, pt, gf2).witness->subset, VertexSet{});
  EXPECT_EQ(link_leray(x, pt, gf2).value, 2);
  EXPECT_EQ(link_leray(x, x, gf2).value, 2);
  EXPECT_EQ(link_leray(x, x, gf2).witness->subset, VertexSet{});

  EXPECT_THROW(relative_leray(x, SimplicialComplex::void_complex(V(3)), gf2), InputError);
  EXPECT_THROW(relative_leray(x, SimplicialComplex::empty_complex(V(4)), gf2), InputError);
}

TEST(RelativeLeray, FullYIsLerayAndEmptyYIsTopDegree) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng(52, i);
    const int n = rng.between(1, 6);
    const auto x = random_complex(rng, V(n), varied_profile(rng, n));
    EXPECT_EQ(relative_leray(x, SimplicialComplex::full_simplex(V(n)), gf2).value, leray_number(x, gf2).value);
    const int top = reduced_betti(x, gf2).top_degree();
    EXPECT_EQ(relative_leray(x, SimplicialComplex::empty_complex(V(n)), gf2).value, std::max(0, top + 1));
  }
}

TEST(RelativeLeray, FacesOutsideXContributeNothingToLinkVersion) {
  const auto x = facets(3, {{1}, {2}});
  const auto y = facets(3, {{3}});
  // lk(X, {3}) is void; only σ = ∅ counts.
  EXPECT_EQ(link_leray(x, y, gf2).value, 1);
  EXPECT_EQ(link_leray(x, y, gf2).witness->subset, VertexSet{});
}

TEST(PropertyP, BoundaryCasesMatchLerayVariants) {
  for (std::uint64_t i = 0; i < 80; ++i) {
    Rng rng(53, i);
    const int n = rng.between(1, 5);
    const auto x = random_complex(rng, V(n), varied_profile(rng, n));
    std::vector<Vertex> av;
    for (Vertex v = 1; v <= static_cast<Vertex>(n); ++v)
      if (rng.chance(0.6)) av.push_back(v);
    const VertexSet a(av);
    const auto y = full_on(V(n), a);
    const int deletion = relative_leray(x, y, gf2).value;
    const int linked = link_leray(x, y, gf2).value;
    const int k = static_cast<int>(a.size());
    for (int d = 0; d <= n; ++d) {
      EXPECT_EQ(property_P(x, a, d, k, 0, gf2).holds, deletion <= d) << x.str() << " A=" << a;
      EXPECT_EQ(property_P(x, a, d, 0, k, gf2).holds, linked <= d) << x.str() << " A=" << a;
    }
  }
}

TEST(PropertyP, Examples) {
  const auto x = boundary_triangle();
  for (int k1 = 0; k1 <= 3; ++k1)
    for (int k2 = 0; k2 <= 3; ++k2) EXPECT_TRUE(property_P(x, V(3), 2, k1, k2, gf2).holds);
  const auto r = property_P(x, V(3), 1, 0, 0, gf2);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.counterexample->degree, 1);
  EXPECT_THROW(property_P(x, {4}, 1, 0, 0, gf2), InputError);
  EXPECT_THROW(property_P(x, V(3), 1, -1, 0, gf2), InputError);
}

TEST(PropertyP, ShiftEquivalence) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Rng rng(54, i);
    const int n = rng.between(2, 5);
    const auto x = random_complex(rng, V(n), varied_profile(rng, n));
    const int d = rng.between(0, n - 1);
    for (int k1 = 0; k1 < n; ++k1)
      for (int k2 = 1; k1 + k2 <= n; ++k2)
        EXPECT_EQ(property_P(x, V(n), d, k1, k2, gf2).holds, property_P(x, V(n), d, k1 + 1, k2 - 1, gf2).holds);
  }
}
