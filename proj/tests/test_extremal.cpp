#include <gtest/gtest.h>

#include <set>

#include "mds/canonical.hpp"
#include "mds/enumeration.hpp"
#include "mds/extremal.hpp"
#include "mds/generators.hpp"
#include "mds/transforms.hpp"
#include "mds/treedp.hpp"
#include "support/oracles.hpp"

using namespace mds;

TEST(Extremal, TStar) {
  EXPECT_EQ(canonical_code(build_t_star(4)), canonical_code(star_graph(3)));
  EXPECT_EQ(count_mds_tree(build_t_star(7)), 11U);
  EXPECT_EQ(count_mds_tree(build_t_star(10)), 30U);
  EXPECT_THROW(build_t_star(8), std::invalid_argument);
  EXPECT_THROW(build_t_star(1), std::invalid_argument);
}

TEST(Extremal, SmallSpecialTrees) {
  const Graph t8 = build_t_star_8();
  EXPECT_TRUE(is_tree(t8));
  EXPECT_EQ(oracle::phi(t8), 15U);
  EXPECT_EQ(diameter(t8), 5);
  int same = 0;
  TreeStream s(8);
  while (auto t = s.next()) same += canonical_code(*t) == canonical_code(t8);
  EXPECT_EQ(same, 1);

  const Graph t9 = build_t_star_9();
  EXPECT_TRUE(is_tree(t9));
  EXPECT_EQ(t9.degree(8), 2);
  EXPECT_EQ(oracle::phi(t9), 18U);
  EXPECT_LT(count_mds_tree(t9), count_mds_forest(disjoint_union(star_graph(3), star_graph(4))));
  EXPECT_EQ(count_mds_forest(disjoint_union(star_graph(3), star_graph(4))), 20U);
}

TEST(Extremal, LargestForests) {
  EXPECT_EQ(canonical_code(build_f1_extremal(6)), canonical_code(repeat_union(path_graph(3), 2)));
  EXPECT_EQ(canonical_code(build_f1_extremal(5)), canonical_code(star_graph(4)));
  EXPECT_EQ(canonical_code(build_f1_extremal(8)), canonical_code(repeat_union(star_graph(3), 2)));
  const std::vector<Count> f1 = {3, 4, 5, 9, 12, 16, 27, 36, 48, 81};
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(count_mds_forest(build_f1_extremal(n)), f1[n - 3]) << n;
  EXPECT_THROW(build_f1_extremal(2), std::invalid_argument);
}

TEST(Extremal, SecondLargestForests) {
  auto phis = [](const std::vector<Graph>& gs) {
    std::vector<Count> out;
    for (const auto& g : gs) out.push_back(count_mds_forest(g));
    return out;
  };
  EXPECT_EQ(phis(build_f2_extremal(7)), std::vector<Count>{11});
  EXPECT_EQ(phis(build_f2_extremal(8)), (std::vector<Count>{15, 15}));
  EXPECT_EQ(phis(build_f2_extremal(9)), std::vector<Count>{20});
  EXPECT_EQ(phis(build_f2_extremal(12)), std::vector<Count>{64});
  EXPECT_EQ(phis(build_f2_extremal(13)), std::vector<Count>{99});
  EXPECT_THROW(build_f2_extremal(6), std::invalid_argument);
}

TEST(Extremal, ConjectureTrees) {
  const auto eight = build_conjecture_trees(8);
  ASSERT_EQ(eight.size(), 1U);
  EXPECT_EQ(canonical_code(eight[0]), canonical_code(build_t_star_8()));
  EXPECT_EQ(canonical_code(build_conjecture_trees(9)[0]), canonical_code(build_t_star_9()));
  const auto fourteen = build_conjecture_trees(14);
  ASSERT_EQ(fourteen.size(), 2U);
  EXPECT_NE(canonical_code(fourteen[0]), canonical_code(fourteen[1]));
  EXPECT_EQ(count_mds_tree(fourteen[0]), count_mds_tree(fourteen[1]));
  EXPECT_EQ(count_mds_tree(fourteen[0]), 117U);
  for (int n = 7; n <= 20; ++n)
    for (const auto& t : build_conjecture_trees(n)) {
      EXPECT_TRUE(is_tree(t));
      EXPECT_EQ(t.order(), n);
    }
}

TEST(Transforms, LeafMove) {
  const Graph p4 = path_graph(4);
  const Graph moved = lemma1_transform(p4, 0, 1, 2);
  EXPECT_EQ(canonical_code(moved), canonical_code(star_graph(3)));
  EXPECT_LE(count_mds_tree(p4), count_mds_tree(moved));
  // P7, moving an end leaf: T - {u, v, x} - N(x) = {4, 5, 6}
  const Graph p7 = path_graph(7);
  const Lemma1Instance at{0, 1, 2};
  EXPECT_TRUE(lemma1_strict_condition(p7, at));
  EXPECT_LT(count_mds_tree(p7), count_mds_tree(lemma1_transform(p7, 0, 1, 2)));
  EXPECT_THROW(lemma1_transform(p4, 1, 2, 3), TransformError);
  EXPECT_THROW(lemma1_transform(repeat_union(p4, 2), 0, 1, 2), TransformError);
}

TEST(Transforms, LeafMoveStrictFormCanTie) {
  // 3-2-1-0-4-5-6 with a leaf 7 on 0: the side condition holds, yet the move
  // leaves the count unchanged.
  const Graph t = make_graph(8, {{3, 2}, {2, 1}, {1, 0}, {0, 4}, {4, 5}, {5, 6}, {0, 7}});
  const Lemma1Instance at{3, 2, 1};
  ASSERT_TRUE(lemma1_strict_condition(t, at));
  const Graph moved = lemma1_transform(t, 3, 2, 1);
  EXPECT_EQ(oracle::phi(t), 11U);
  EXPECT_EQ(oracle::phi(moved), 11U);
}

TEST(Transforms, Reattach) {
  // x = 0 with leaves 1, 2 and neighbor t = 3; t carries leaf y = 4 and continues to 5.
  const Graph t = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
  const Graph moved = lemma2_transform(t, 0, 3, 4);
  EXPECT_EQ(moved.vertices(), t.vertices());
  EXPECT_TRUE(is_tree(moved));
  EXPECT_LE(count_mds_tree(t), count_mds_tree(moved));
  EXPECT_THROW(lemma2_transform(t, 0, 3, 1), TransformError);
}

TEST(Transforms, ReattachStrict) {
  const Graph t = make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}});
  const Lemma2Instance at{0, 3, 4};
  ASSERT_TRUE(lemma2_strict_condition(t, at));
  EXPECT_LT(count_mds_brute(t), count_mds_brute(lemma2_transform(t, 0, 3, 4)));
  EXPECT_THROW(lemma2_transform(t, 3, 0, 1), TransformError);
}

TEST(Transforms, LeafDeletionIdentity) {
  const Graph k14 = star_graph(4);
  EXPECT_EQ(canonical_code(lemma3_delete_leaf(k14, 0, 4)), canonical_code(star_graph(3)));
  EXPECT_EQ(count_mds_brute(k14),
            count_mds_brute(lemma3_delete_leaf(k14, 0, 4)) + count_restricted(k14, VertexSet::of({0, 4}), {}));
  // spider: center 0 with three leaves and two longer legs
  const Graph spider = make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {0, 6}, {6, 7}});
  EXPECT_EQ(count_mds_brute(spider),
            count_mds_brute(lemma3_delete_leaf(spider, 0, 3)) + count_restricted(spider, VertexSet::of({0, 3}), {}));
  EXPECT_THROW(lemma3_delete_leaf(path_graph(3), 1, 0), TransformError);
}

TEST(Transforms, InstanceListsAreAdmissible) {
  for (int n = 4; n <= 9; ++n) {
    TreeStream s(n);
    while (auto t = s.next()) {
      for (const auto& at : lemma1_instances(*t)) EXPECT_NO_THROW(lemma1_transform(*t, at.u, at.v, at.x));
      for (const auto& at : lemma2_instances(*t)) EXPECT_NO_THROW(lemma2_transform(*t, at.x, at.t, at.y));
    }
  }
}
