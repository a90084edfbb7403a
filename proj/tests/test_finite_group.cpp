#include <gtest/gtest.h>

#include "groupring/finite_group.hpp"

using namespace groupring;

TEST(Cyclic, Examples) {
  const auto c2 = make_cyclic(2);
  EXPECT_EQ(c2.mul(1, 1), 0u);
  const auto c1 = make_cyclic(1);
  EXPECT_EQ(c1.order(), 1u);
  const auto c3 = make_cyclic(3);
  EXPECT_EQ(c3.mul(1, 2), 0u);
  EXPECT_EQ(c3.element_name(2), "g^2");
  EXPECT_THROW(make_cyclic(0), InvalidArgument);
  EXPECT_THROW(make_cyclic(25), InvalidArgument);
}

TEST(Symmetric, Examples) {
  const auto s3 = make_symmetric(3);
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_TRUE(find_group_isomorphism(make_symmetric(2), make_cyclic(2)).has_value());
  EXPECT_EQ(make_symmetric(4).order(), 24u);
  EXPECT_THROW(make_symmetric(5), InvalidArgument);
  EXPECT_THROW(make_symmetric(1), InvalidArgument);
}

TEST(Symmetric, CompositionConvention) {
  // One-line notation in lexicographic order: 012, 021, 102, 120, 201, 210.
  const auto s3 = make_symmetric(3);
  const std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (Elem s = 0; s < 6; ++s)
    for (Elem t = 0; t < 6; ++t) {
      std::vector<int> st(3);
      for (int i = 0; i < 3; ++i) st[i] = perms[s][perms[t][i]];
      EXPECT_EQ(perms[s3.mul(s, t)], st);
    }
  EXPECT_EQ(s3.element_order(3), 3u);
  EXPECT_EQ(s3.element_order(1), 2u);
}

TEST(Product, Examples) {
  const auto v4 = group_direct_product(make_cyclic(2), make_cyclic(2));
  EXPECT_EQ(v4.order(), 4u);
  for (Elem x = 1; x < 4; ++x) EXPECT_EQ(v4.element_order(x), 2u);
  const auto c2c3 = group_direct_product(make_cyclic(2), make_cyclic(3));
  EXPECT_TRUE(c2c3.is_abelian());
  EXPECT_TRUE(find_group_isomorphism(c2c3, make_cyclic(6)).has_value());
  EXPECT_TRUE(find_group_isomorphism(group_direct_product(make_cyclic(1), make_symmetric(3)), make_symmetric(3)).has_value());
  EXPECT_FALSE(find_group_isomorphism(v4, make_cyclic(4)).has_value());
  EXPECT_THROW(group_direct_product(make_symmetric(4), make_cyclic(2)), CapExceeded);
}

TEST(PGroup, Examples) {
  EXPECT_TRUE(is_p_group(make_cyclic(4), 2));
  EXPECT_TRUE(is_p_group(group_direct_product(make_cyclic(2), make_cyclic(2)), 2));
  EXPECT_TRUE(is_p_group(make_cyclic(9), 3));
  EXPECT_FALSE(is_p_group(make_symmetric(3), 2));
  EXPECT_FALSE(is_p_group(make_cyclic(6), 3));
  EXPECT_THROW(is_p_group(make_cyclic(4), 4), InvalidArgument);
}

TEST(Group, ConstructorRejectsBadTables) {
  EXPECT_THROW(FiniteGroup(2, {0, 1, 1, 1}, "bad"), InvalidArgument);
  EXPECT_THROW(FiniteGroup(2, {1, 0, 0, 1}, "bad"), InvalidArgument);
  // Latin square with identity that is not associative.
  const std::vector<std::uint8_t> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(FiniteGroup(5, loop, "loop"), InvalidArgument);
}

TEST(Group, Invariants) {
  for (const auto& g : {make_cyclic(7), make_symmetric(4), group_direct_product(make_symmetric(3), make_cyclic(2))}) {
    for (Elem a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.inverse(g.inverse(a)), a);
      EXPECT_EQ(g.mul(a, g.inverse(a)), 0u);
      std::vector<bool> row(g.order(), false), col(g.order(), false);
      for (Elem b = 0; b < g.order(); ++b) {
        row[g.mul(a, b)] = true;
        col[g.mul(b, a)] = true;
        for (Elem c = 0; c < g.order(); ++c) EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
      }
      EXPECT_EQ(std::count(row.begin(), row.end(), true), static_cast<long>(g.order()));
      EXPECT_EQ(std::count(col.begin(), col.end(), true), static_cast<long>(g.order()));
    }
  }
}
