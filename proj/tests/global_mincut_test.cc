#include <gtest/gtest.h>

#include "stcut/errors.h"
#include "stcut/fixtures.h"
#include "stcut/global_mincut.h"
#include "stcut/second_mincut.h"
#include "test_util.h"

namespace stcut {
namespace {

using testing::Family;

Cut via_second(const Graph& h) { return second_mincut(h).cut; }

TEST(GlobalMincutTest, Fixtures) {
  GlobalCutResult t1 = global_mincut(fixtures::t1());
  EXPECT_EQ(t1.capacity, 0);  // nothing leaves t
  EXPECT_EQ(t1.maxflow_calls, 4);
  Graph cycle = Graph::from_triples(3, 0, 2, true,
                                    {{0, 1, 2}, {1, 2, 3}, {2, 0, 1}});
  EXPECT_EQ(global_mincut(cycle).capacity, 1);
  GlobalCutResult via = global_mincut_via_second_mincut(cycle, via_second);
  EXPECT_EQ(via.capacity, 1);
  EXPECT_EQ(via.second_mincut_calls, 1);
  EXPECT_EQ(cut_capacity(cycle, via.side).capacity, 1);
}

TEST(GlobalMincutTest, MatchesEnumeration) {
  Rng rng(51);
  for (int round = 0; round < 120; ++round) {
    Graph g = testing::random_case(
        rng, round % 2 ? Family::kDirected : Family::kUndirectedMulti, 2, 8);
    GlobalCutResult r = global_mincut(g);
    EXPECT_EQ(r.capacity, testing::naive_global_mincut(g));
    EXPECT_EQ(r.capacity, testing::naive_capacity(
                              g, testing::to_mask(g.num_vertices(), r.side)));
    EXPECT_EQ(r.maxflow_calls, 2 * (g.num_vertices() - 1));
  }
}

TEST(GlobalMincutTest, ReductionThroughSecondMincut) {
  Rng rng(52);
  int called = 0;
  for (int round = 0; round < 120; ++round) {
    Graph g = testing::random_case(rng, Family::kDirected, 2, 8);
    for (auto second : {SecondMincutFn(via_second),
                        SecondMincutFn([](const Graph& h) {
                          return second_mincut_covering(h).cut;
                        })}) {
      GlobalCutResult r = global_mincut_via_second_mincut(g, second);
      EXPECT_EQ(r.capacity, testing::naive_global_mincut(g));
      EXPECT_LE(r.second_mincut_calls, 1);
      called += r.second_mincut_calls;
    }
  }
  EXPECT_GT(called, 0);
}

TEST(GlobalMincutTest, ReductionNeedsADirectedGraph) {
  EXPECT_THROW(global_mincut_via_second_mincut(fixtures::u1(), via_second),
               CutError);
}

}  // namespace
}  // namespace stcut
