#include <gtest/gtest.h>

#include "leray/flat_spectral.hpp"
#include "leray/matroid.hpp"
#include "leray/random.hpp"
#include "support/fixtures.hpp"

using namespace leray;
using namespace fixtures;

namespace {
Matroid two_blocks() { return partition_matroid({{1, 2}, {3, 4}}); }
}  // namespace

TEST(Matroid, Validation) {
  EXPECT_EQ(validate_matroid(facets(3, {{1, 2}, {1, 3}, {2, 3}})), uniform_matroid(2, 3));
  const auto bad = SimplicialComplex::from_faces(V(3), {{}, {1}, {2}, {3}, {1, 2}});
  EXPECT_THROW(validate_matroid(bad), InputError);
  ASSERT_TRUE(purity_violation(bad).has_value());
  EXPECT_EQ(*purity_violation(bad), (VertexSet{1, 2, 3}));
  EXPECT_TRUE(exchange_violation(bad).has_value());
  EXPECT_NO_THROW(validate_matroid(two_blocks().independents()));
  EXPECT_THROW(validate_matroid(SimplicialComplex::void_complex(V(2))), InputError);
}

TEST(Matroid, ExchangeAndPurityAgreeOnRandomComplexes) {
  int matroids = 0;
  for (std::uint64_t i = 0; i < 400; ++i) {
    Rng rng(41, i);
    const int n = rng.between(0, 6);
    const auto x = random_complex(rng, V(n), varied_profile(rng, n));
    const bool ex = !exchange_violation(x).has_value();
    EXPECT_EQ(ex, !purity_violation(x).has_value()) << x.str();
    matroids += ex;
  }
  EXPECT_GT(matroids, 10);
}

TEST(Matroid, UniformAndPartition) {
  const auto u = uniform_matroid(2, 4);
  EXPECT_EQ(u.rank(), 2);
  EXPECT_TRUE(u.is_independent({3, 4}));
  EXPECT_EQ(u.rank({1, 2, 3}), 2);
  const auto p = two_blocks();
  EXPECT_TRUE(p.is_independent({1, 3}));
  EXPECT_FALSE(p.is_independent({1, 2}));
  EXPECT_EQ(p.rank(), 2);
  EXPECT_THROW(partition_matroid({{1, 2}, {2, 3}}), InputError);
  EXPECT_THROW(partition_matroid({{1}, {}}), InputError);
  EXPECT_THROW(uniform_matroid(3, 2), InputError);
}

TEST(Matroid, RankMatchesOracle) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(42, i);
    const int n = rng.between(1, 7);
    const auto m = random_matroid(rng, n);
    const auto ind = to_oracle(m.independents());
    for (Mask a = 0; a <= m.full_mask(); ++a) EXPECT_EQ(m.rank_mask(a), oracle::rank_of(ind, a));
  }
}

TEST(Matroid, Closure) {
  const auto p = two_blocks();
  EXPECT_EQ(p.closure({1}), (VertexSet{1, 2}));
  EXPECT_EQ(p.rank(VertexSet{}), 0);
  for (Mask a = 0; a <= p.full_mask(); ++a) {
    const VertexSet s = p.ground().subset(a);
    EXPECT_EQ(p.closure(p.closure(s)), p.closure(s));
    EXPECT_TRUE(s.is_subset_of(p.closure(s)));
  }
  // Loops lie in closure(∅).
  const auto loops = Matroid::from_predicate(V(3), [](Mask a) { return (a & 1u) == 0 && std::popcount(a) <= 1; });
  EXPECT_EQ(loops.closure(VertexSet{}), (VertexSet{1}));
  EXPECT_THROW(p.rank({5}), InputError);
}

TEST(Matroid, FlatLattice) {
  const auto l = flat_lattice(uniform_matroid(2, 3));
  EXPECT_EQ(l.all.size(), 5u);
  EXPECT_EQ(l.proper, (std::vector<VertexSet>{{}, {1}, {2}, {3}}));
  EXPECT_EQ(l.positive, (std::vector<VertexSet>{{1}, {2}, {3}}));
  const auto l12 = flat_lattice(uniform_matroid(1, 2));
  EXPECT_EQ(l12.proper, (std::vector<VertexSet>{{}}));
  EXPECT_TRUE(l12.positive.empty());
}

TEST(Matroid, Contraction) {
  const auto u = uniform_matroid(2, 4);
  const auto c = contract(u, {1});
  EXPECT_EQ(c.ground(), (VertexSet{2, 3, 4}));
  EXPECT_EQ(c.rank(), 1);
  EXPECT_EQ(c.independents(), Matroid::from_predicate({2, 3, 4}, [](Mask a) { return std::popcount(a) <= 1; })
                                  .independents());
  EXPECT_EQ(contract(u, {}), u);
  EXPECT_THROW(contract(two_blocks(), {1}), InputError);
  EXPECT_THROW(contract_with_basis(u, {1}, {2}), InputError);
}

TEST(Matroid, Dual) {
  EXPECT_EQ(dual(uniform_matroid(2, 4)), uniform_matroid(2, 4));
  EXPECT_EQ(dual(uniform_matroid(1, 5)), uniform_matroid(4, 5));
  const auto d = dual(free_matroid(V(3)));
  EXPECT_EQ(d.rank(), 0);
  EXPECT_TRUE(d.independents().is_empty_complex());
  EXPECT_EQ(dual(dual(two_blocks())), two_blocks());
}

TEST(Matroid, LatticeIsomorphismUnderContraction) {
  // K_0(M/K) and K(M)_{>K} correspond via F ↦ F \ K, preserving inclusion.
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng(43, i);
    const auto m = random_matroid(rng, rng.between(1, 6));
    for (const auto& k : flat_lattice(m).proper) {
      const auto quotient = flat_lattice(contract(m, k)).positive;
      std::vector<VertexSet> above;
      for (const auto& f : flat_lattice(m).proper)
        if (k.is_subset_of(f) && f != k) above.push_back(f - k);
      std::sort(above.begin(), above.end());
      auto q = quotient;
      std::sort(q.begin(), q.end());
      EXPECT_EQ(q, above);
    }
  }
}

TEST(Matroid, RandomGeneratorsProduceValidMatroids) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(44, i);
    const auto m = random_matroid(rng, rng.between(0, 7), 3);
    EXPECT_LE(m.rank(), 3);
    EXPECT_FALSE(exchange_violation(m.independents()).has_value());
  }
}
