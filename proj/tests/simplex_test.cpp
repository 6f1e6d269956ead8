#include <gtest/gtest.h>

#include "leray/simplex.hpp"

using namespace leray;

TEST(Simplex, NormalizesVertices) {
  Simplex s{3, 1, 2, 1};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.dim(), 2);
  EXPECT_EQ(s.str(), "{1,2,3}");
  EXPECT_EQ(Simplex{}.dim(), -1);
}

TEST(Simplex, SetOperations) {
  Simplex a{1, 2, 3}, b{2, 3, 4};
  EXPECT_EQ(a | b, (Simplex{1, 2, 3, 4}));
  EXPECT_EQ(a & b, (Simplex{2, 3}));
  EXPECT_EQ(a - b, (Simplex{1}));
  EXPECT_TRUE((Simplex{2, 3}).is_subset_of(a));
  EXPECT_FALSE(a.is_disjoint_from(b));
  EXPECT_TRUE((Simplex{1}).is_disjoint_from(Simplex{4}));
  EXPECT_EQ(a.without_index(1), (Simplex{1, 3}));
  EXPECT_EQ((Simplex{1, 3}).with(2), a);
  EXPECT_EQ(a.with(2), a);
}

TEST(Simplex, LexOrderAndSizeThenLex) {
  EXPECT_LT((Simplex{1, 2}), (Simplex{1, 3}));
  EXPECT_LT((Simplex{1, 2, 3}), (Simplex{2}));
  EXPECT_TRUE(SizeThenLex{}(Simplex{2}, Simplex{1, 2, 3}));
  EXPECT_TRUE(SizeThenLex{}(Simplex{}, Simplex{1}));
}

TEST(Simplex, MaskRoundTrip) {
  const VertexSet v{2, 5, 7, 9};
  for (Mask m = 0; m < 16; ++m) EXPECT_EQ(v.mask_of(v.subset(m)), m);
  EXPECT_THROW(v.mask_of(Simplex{3}), InputError);
}

TEST(Simplex, VertexRangeAndWidthLimit) {
  EXPECT_EQ(vertex_range(1, 3), (Simplex{1, 2, 3}));
  EXPECT_TRUE(vertex_range(1, 0).empty());
  EXPECT_THROW(require_mask_width(vertex_range(1, 25)), InputError);
  EXPECT_NO_THROW(require_mask_width(vertex_range(1, 24)));
}
