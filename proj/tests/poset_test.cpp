#include <gtest/gtest.h>

#include "leray/homology.hpp"
#include "leray/nerve.hpp"
#include "leray/poset.hpp"
#include "leray/random.hpp"
#include "support/fixtures.hpp"

using namespace leray;
using namespace fixtures;

namespace {
std::vector<std::pair<std::size_t, std::size_t>> diagonal(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> d;
  for (std::size_t i = 0; i < n; ++i) d.emplace_back(i, i);
  return d;
}
}  // namespace

TEST(Poset, RelationValidation) {
  auto rel = diagonal(3);
  EXPECT_NO_THROW(Poset<int>::from_relation({1, 2, 3}, rel));
  EXPECT_THROW(Poset<int>::from_relation({1, 2, 3}, {{0, 0}, {1, 1}}), InputError);  // not reflexive
  rel.emplace_back(0, 1);
  rel.emplace_back(1, 0);
  EXPECT_THROW(Poset<int>::from_relation({1, 2, 3}, rel), InputError);  // not antisymmetric
  auto chain = diagonal(3);
  chain.emplace_back(0, 1);
  chain.emplace_back(1, 2);
  EXPECT_THROW(Poset<int>::from_relation({1, 2, 3}, chain), InputError);  // not transitive
  EXPECT_THROW(Poset<int>::from_relation({1}, {{0, 3}}), InputError);
}

TEST(Poset, OrderComplexExamples) {
  const auto anti = Poset<int>::from_relation({1, 2, 3}, diagonal(3));
  const auto a = order_complex(anti);
  EXPECT_EQ(a.dimension(), 0);
  EXPECT_EQ(a.count_of_dim(0), 3u);

  auto rel = diagonal(3);
  for (auto p : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 2}, {0, 2}}) rel.push_back(p);
  EXPECT_TRUE(order_complex(Poset<int>::from_relation({1, 2, 3}, rel)).is_full_simplex());

  EXPECT_TRUE(order_complex(Poset<int>{}).is_empty_complex());
}

TEST(Poset, UpperSets) {
  const auto p = Poset<int>::from_predicate({1, 2, 3, 6}, [](int a, int b) { return b % a == 0; });
  EXPECT_EQ(p.strictly_above(0).size(), 3u);
  EXPECT_EQ(p.at_or_above(1).elements(), (std::vector<int>{2, 6}));
  EXPECT_EQ(p.strictly_above(3).size(), 0u);
}

TEST(Poset, BarycentricSubdivision) {
  const auto edge = barycentric_subdivision(facets(2, {{1, 2}}));
  EXPECT_EQ(edge.count_of_dim(0), 3u);
  EXPECT_EQ(edge.count_of_dim(1), 2u);
  EXPECT_EQ(edge.dimension(), 1);

  const auto hex = barycentric_subdivision(boundary_triangle());
  EXPECT_EQ(hex.count_of_dim(0), 6u);
  EXPECT_EQ(hex.count_of_dim(1), 6u);
  EXPECT_EQ(hex.dimension(), 1);
  EXPECT_EQ(reduced_betti(hex, FieldSpec::gf2())[1], 1u);

  EXPECT_TRUE(barycentric_subdivision(SimplicialComplex::empty_complex(V(2))).is_empty_complex());
  EXPECT_THROW(barycentric_subdivision(SimplicialComplex::void_complex(V(2))), InputError);
}

TEST(Poset, SubdivisionPreservesHomology) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng(21, i);
    const int n = rng.between(1, 5);
    const auto x = random_complex(rng, V(n), varied_profile(rng, n));
    for (const auto& f : {FieldSpec::gf2(), FieldSpec::gf3()})
      EXPECT_TRUE(reduced_betti(barycentric_subdivision(x), f).same_ranks(reduced_betti(x, f))) << x.str();
  }
}

TEST(Nerve, Examples) {
  const SetFamily tri(std::vector<VertexSet>{{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(nerve(tri), boundary_triangle());

  const auto pts = nerve(SetFamily(std::vector<VertexSet>{{1}, {2}}));
  EXPECT_EQ(pts.facets(), (std::vector<Simplex>{{1}, {2}}));

  EXPECT_TRUE(nerve(SetFamily(std::vector<VertexSet>{{1}, {1}, {1}})).is_full_simplex());
}

TEST(Nerve, EmptyMembersAndErrors) {
  const auto n = nerve(SetFamily(std::vector<VertexSet>{{}, {1}}));
  EXPECT_FALSE(n.contains(Simplex{1}));
  EXPECT_TRUE(n.contains(Simplex{2}));
  EXPECT_THROW(nerve(SetFamily{}), InputError);
  EXPECT_THROW(SetFamily(std::vector<SetFamily::Member>{{1, {1}}, {1, {2}}}), InputError);
}
