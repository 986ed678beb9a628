#include <gtest/gtest.h>

#include <cmath>

#include "hbst/naive_bst.hpp"
#include "hbst/oracle_set.hpp"
#include "hbst/workload.hpp"

namespace hbst {
namespace {

NaiveBst build(std::initializer_list<Key> keys) {
  NaiveBst bst;
  for (Key k : keys) bst.insert(k);
  return bst;
}

NaiveBst ascending(Key n) {
  NaiveBst bst;
  for (Key k = 0; k < n; ++k) bst.insert(k);
  return bst;
}

TEST(NaiveBstTest, AscendingIsAChain) {
  const NaiveBst chain = ascending(8);
  EXPECT_EQ(chain.stats().height, 7);
  EXPECT_TRUE(chain.satisfies_search_property());
  EXPECT_EQ(ascending(4096).stats().height, 4095);
}

TEST(NaiveBstTest, BalancedOrderGivesPerfectTree) {
  const NaiveBst bst = build({4, 2, 6, 1, 3, 5, 7});
  EXPECT_EQ(bst.stats().height, 2);
  const SearchOutcome out = bst.search(5);
  EXPECT_TRUE(out.found);
  EXPECT_EQ(out.depth, 2u);
}

TEST(NaiveBstTest, MidpointLevelOrderHeightThree) {
  const NaiveBst bst = build({8, 4, 12, 2, 6, 10, 14, 1, 3, 5, 7, 9, 11, 13, 15});
  EXPECT_EQ(bst.stats().height, 3);
  EXPECT_EQ(bst.stats().node_count, 15u);
}

TEST(NaiveBstTest, EmptyStats) {
  const NaiveBst bst;
  const NaiveBst::Stats s = bst.stats();
  EXPECT_EQ(s.height, -1);
  EXPECT_EQ(s.node_count, 0u);
  EXPECT_FALSE(s.avg_depth.has_value());
  EXPECT_FALSE(bst.search(3).found);
}

TEST(NaiveBstTest, CountsOneComparisonPerVisitedNode) {
  NaiveBst chain = ascending(8);
  chain.reset_comparisons();
  const SearchOutcome out = chain.search(7);
  EXPECT_TRUE(out.found);
  EXPECT_EQ(out.depth, 7u);
  EXPECT_EQ(chain.comparisons(), 8u);
  EXPECT_EQ(out.visited, 8u);
}

TEST(NaiveBstTest, InsertComparisonsAndDuplicates) {
  NaiveBst bst;
  bst.insert(5);
  EXPECT_EQ(bst.comparisons(), 0u);
  bst.insert(3);
  EXPECT_EQ(bst.comparisons(), 1u);
  EXPECT_EQ(bst.insert(3), NaiveBst::InsertResult::kDuplicate);
  EXPECT_EQ(bst.comparisons(), 3u);
  EXPECT_EQ(bst.size(), 2u);
}

TEST(NaiveBstTest, RandomOrderDepthNearTwoLnN) {
  // Expected average depth is 2(1 + 1/n)H_n - 4; spot-check a small n.
  constexpr std::uint64_t n = 10000;
  const double knuth = 1.386 * std::log2(static_cast<double>(n));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    NaiveBst bst;
    for (Key k : generate({WorkloadKind::kRandom, n, KeyWidth(32), seed})) bst.insert(k);
    const double avg = *bst.stats().avg_depth;
    EXPECT_GE(avg, 0.8 * knuth);
    EXPECT_LE(avg, 1.1 * knuth);
    EXPECT_TRUE(bst.satisfies_search_property());
  }
}

TEST(OracleSetTest, SetSemantics) {
  OracleSet o;
  EXPECT_TRUE(o.apply(OracleSet::Op::kInsert, 5));
  EXPECT_TRUE(o.apply(OracleSet::Op::kContains, 5));
  EXPECT_FALSE(o.apply(OracleSet::Op::kInsert, 5));
  EXPECT_FALSE(o.apply(OracleSet::Op::kDelete, 6));
  EXPECT_TRUE(o.apply(OracleSet::Op::kDelete, 5));
  EXPECT_FALSE(o.apply(OracleSet::Op::kContains, 5));
  EXPECT_EQ(o.size(), 0u);
}

}  // namespace
}  // namespace hbst
