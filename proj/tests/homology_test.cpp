#include <gtest/gtest.h>

#include "leray/homology.hpp"
#include "leray/matrix.hpp"
#include "leray/random.hpp"
#include "support/fixtures.hpp"

using namespace leray;
using namespace fixtures;

TEST(Field, ParseAndNames) {
  EXPECT_EQ(FieldSpec::parse("gf2"), FieldSpec::gf2());
  EXPECT_EQ(FieldSpec::parse("gf5").name(), "gf5");
  EXPECT_TRUE(FieldSpec::parse("q").is_rational());
  EXPECT_THROW(FieldSpec::parse("gf4"), InputError);
  EXPECT_THROW(FieldSpec::parse("gf"), InputError);
  EXPECT_THROW(FieldSpec::parse("gf4294967311"), InputError);
  EXPECT_THROW(FieldSpec::parse("r"), InputError);
}

TEST(Field, PrimeArithmetic) {
  const PrimeField f(7);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_THROW(f.inv(0), InternalError);
}

TEST(Matrix, RankBasics) {
  ExactMatrix<PrimeField> z(PrimeField(3), 3, 4);
  EXPECT_EQ(matrix_rank(z), 0u);
  for (std::size_t n : {1u, 4u, 9u}) {
    ExactMatrix<PrimeField> id(PrimeField(2), n, n);
    ExactMatrix<RationalField> idq(RationalField{}, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      id.add_to(i, i, 1);
      idq.add_to(i, i, 1);
    }
    EXPECT_EQ(matrix_rank(id), n);
    EXPECT_EQ(matrix_rank(idq), n);
  }
}

TEST(Matrix, RationalRankNeedsExactArithmetic) {
  // [[2, 4], [1, 2]] is singular over Q but the entries are not units mod 2.
  ExactMatrix<RationalField> m(RationalField{}, 2, 2);
  m.add_to(0, 0, 2);
  m.add_to(0, 1, 4);
  m.add_to(1, 0, 1);
  m.add_to(1, 1, 2);
  EXPECT_EQ(matrix_rank(m), 1u);
  m.add_to(1, 1, RationalField::value_type(1, 3));
  EXPECT_EQ(matrix_rank(m), 2u);
}

TEST(Boundary, Examples) {
  const auto x = boundary_triangle();
  const auto d1 = boundary_matrix(x, 1, PrimeField(2));
  EXPECT_EQ(d1.rows(), 3u);
  EXPECT_EQ(d1.cols(), 3u);
  EXPECT_EQ(matrix_rank(d1), 2u);
  EXPECT_TRUE(boundary_matrix(x, 2, PrimeField(2)).is_zero());
  const auto aug = boundary_matrix(facets(1, {{1}}), 0, PrimeField(3));
  EXPECT_EQ(aug.rows(), 1u);
  EXPECT_EQ(matrix_rank(aug), 1u);
  EXPECT_THROW(boundary_matrix(SimplicialComplex::void_complex(V(2)), 0, PrimeField(2)), InputError);
  EXPECT_THROW(boundary_matrix(x, 3, PrimeField(2)), InputError);
}

TEST(Boundary, ProjectivePlaneRanks) {
  const auto x = rp2();
  EXPECT_EQ(matrix_rank(boundary_matrix(x, 2, PrimeField(2))), 9u);
  EXPECT_EQ(matrix_rank(boundary_matrix(x, 2, PrimeField(3))), 10u);
  EXPECT_EQ(matrix_rank(boundary_matrix(x, 2, RationalField{})), 10u);
}

TEST(Boundary, SquaresToZero) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Rng rng(31, i);
    const int n = rng.between(2, 6);
    const auto x = random_complex(rng, V(n), varied_profile(rng, n));
    for (int k = 0; k <= x.dimension(); ++k) {
      EXPECT_TRUE(boundary_matrix(x, k, PrimeField(3)).multiply(boundary_matrix(x, k + 1, PrimeField(3))).is_zero());
      EXPECT_TRUE(
          boundary_matrix(x, k, RationalField{}).multiply(boundary_matrix(x, k + 1, RationalField{})).is_zero());
    }
  }
}

TEST(Betti, Examples) {
  const auto b = reduced_betti(boundary_triangle(), FieldSpec::gf2());
  EXPECT_EQ(b.support(), (std::vector<int>{1}));
  EXPECT_EQ(b[1], 1u);

  const auto e = reduced_betti(SimplicialComplex::empty_complex(V(2)), FieldSpec::gf3());
  EXPECT_EQ(e[-1], 1u);
  EXPECT_EQ(e.support(), (std::vector<int>{-1}));
  EXPECT_TRUE(reduced_betti(SimplicialComplex::void_complex(V(2)), FieldSpec::gf2()).is_zero());
  EXPECT_TRUE(reduced_betti(SimplicialComplex::full_simplex(V(4)), FieldSpec::rational()).is_zero());
}

TEST(Betti, ProjectivePlane) {
  const auto x = rp2();
  const auto b2 = reduced_betti(x, FieldSpec::gf2());
  EXPECT_EQ(b2[1], 1u);
  EXPECT_EQ(b2[2], 1u);
  EXPECT_EQ(b2.support(), (std::vector<int>{1, 2}));
  EXPECT_TRUE(reduced_betti(x, FieldSpec::gf3()).is_zero());
  EXPECT_TRUE(reduced_betti(x, FieldSpec::rational()).is_zero());
}

TEST(Betti, MatchesOracle) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(32, i);
    const int n = rng.between(0, 7);
    const auto x = random_complex(rng, V(n), varied_profile(rng, n));
    for (std::uint32_t p : {2u, 3u, 5u})
      EXPECT_EQ(ranks(reduced_betti(x, FieldSpec::prime(p))), ranks(oracle::reduced_betti(to_oracle(x), p)))
          << x.str() << " p=" << p;
  }
}

TEST(Betti, RationalAgreesWithLargePrimeOnSmallComplexes) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng(33, i);
    const int n = rng.between(1, 6);
    const auto x = random_complex(rng, V(n), varied_profile(rng, n));
    EXPECT_TRUE(reduced_betti(x, FieldSpec::rational()).same_ranks(reduced_betti(x, FieldSpec::prime(1000003))));
  }
}

TEST(Betti, EulerPoincare) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(34, i);
    const int n = rng.between(1, 7);
    const auto x = random_complex(rng, V(n), varied_profile(rng, n));
    std::int64_t faces = 0;
    for (int k = 0; k <= x.dimension(); ++k)
      faces += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(x.count_of_dim(k));
    for (const auto& f : {FieldSpec::gf2(), FieldSpec::gf3(), FieldSpec::rational()}) {
      EXPECT_EQ(euler_characteristic(x, f), faces);
      EXPECT_EQ(reduced_betti(x, f).euler(), faces - 1);
    }
  }
}

TEST(Betti, UnreducedAndCohomology) {
  const auto two = two_edges();
  EXPECT_EQ(unreduced_betti(two, FieldSpec::gf2()), (std::vector<std::size_t>{2}));
  EXPECT_TRUE(unreduced_betti(SimplicialComplex::empty_complex(V(1)), FieldSpec::gf2()).empty());
  EXPECT_EQ(cohomology_rank(boundary_triangle(), 1, FieldSpec::gf2()), 1u);
  EXPECT_EQ(cohomology_rank(boundary_triangle(), 0, FieldSpec::gf2()), 0u);
  EXPECT_EQ(cohomology_rank(SimplicialComplex::empty_complex(V(3)), -1, FieldSpec::gf3()), 1u);
}

TEST(Betti, VectorHelpers) {
  const BettiVector b(FieldSpec::gf2(), {0, 2, 0, 1, 0, 0});
  EXPECT_EQ(b.top_degree(), 2);
  EXPECT_EQ(b.euler(), 2 + 1 * 1);
  EXPECT_FALSE(b == BettiVector(FieldSpec::gf3(), {0, 2, 0, 1}));
  EXPECT_TRUE(b.same_ranks(BettiVector(FieldSpec::gf3(), {0, 2, 0, 1})));
  EXPECT_EQ(BettiVector(FieldSpec::gf2()).top_degree(), -2);
}
