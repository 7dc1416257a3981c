#include <gtest/gtest.h>

#include <random>

#include "stcut/errors.h"
#include "stcut/fixtures.h"
#include "stcut/flow.h"
#include "stcut/sensitivity.h"
#include "test_util.h"

namespace stcut {
namespace {

using testing::Family;

Graph without(const Graph& g, EdgeId a, EdgeId b) {
  return remove_edge(remove_edge(g, a), b);
}

Graph with(const Graph& g, VertexPair a, VertexPair b) {
  return add_edge(add_edge(g, a.u, a.v, 1), b.u, b.v, 1);
}

void expect_answer(const Graph& updated, const QueryAnswer& a) {
  Capacity truth = max_flow(updated).flow.value;
  EXPECT_EQ(a.capacity, truth);
  ASSERT_TRUE(is_st_cut(updated, a.cut_side));
  Cut c = cut_capacity(updated, a.cut_side);
  EXPECT_EQ(c.capacity, a.capacity);
  EXPECT_EQ(static_cast<Capacity>(a.contributing.size()), a.capacity);
  for (const CrossingEdge& e : a.contributing) EXPECT_LT(e.u, e.v);
}

TEST(SensitivityTest, U1Failures) {
  Graph g = fixtures::u1();
  OracleState compact = OracleState::compact(g);
  OracleState baseline = OracleState::baseline(g);
  EXPECT_EQ(compact.lambda, 2);
  // s-a and a-t both carry flow.
  QueryAnswer a = query_fail(compact, 0, 1);
  EXPECT_EQ(a.capacity, 1);
  EXPECT_EQ(query_fail(baseline, 0, 1).capacity, 1);
  expect_answer(without(g, 0, 1), a);
  // s-a and s-b isolate s.
  QueryAnswer b = query_fail(compact, 0, 2);
  EXPECT_EQ(b.capacity, 0);
  EXPECT_EQ(b.cut_side, (std::vector<VertexId>{0}));
  EXPECT_TRUE(b.contributing.empty());
  // The anchor alone costs nothing.
  EXPECT_EQ(query_fail(compact, 4, 0).capacity, 1);
}

TEST(SensitivityTest, BothIdleKeepsTheStoredCut) {
  Graph g = fixtures::dense_idle(4);
  OracleState compact = OracleState::compact(g);
  // Two clique edges far from the flow.
  EdgeId e1 = *g.find_edge(2, 3);
  EdgeId e2 = *g.find_edge(3, 4);
  QueryAnswer a = query_fail(compact, e1, e2);
  EXPECT_EQ(a.trace, QueryTrace::kBothIdle);
  EXPECT_EQ(a.capacity, compact.lambda);
  expect_answer(without(g, e1, e2), a);
}

TEST(SensitivityTest, InsertionsOnFixtures) {
  Graph g = fixtures::u1();
  OracleState compact = OracleState::compact(g);
  QueryAnswer a = query_insert(compact, {0, 3}, {0, 3});
  EXPECT_EQ(a.capacity, 4);
  expect_answer(with(g, {0, 3}, {0, 3}), a);
  QueryAnswer b = query_insert(compact, {1, 2}, {0, 1});
  EXPECT_EQ(b.capacity, 2);
  expect_answer(with(g, {1, 2}, {0, 1}), b);
}

TEST(SensitivityTest, FailuresAgreeWithRecomputation) {
  Rng rng(101);
  std::map<QueryTrace, int> traces;
  for (int round = 0; round < 25; ++round) {
    Graph g = testing::random_case(rng, Family::kSimple, 3, 9);
    OracleState compact = OracleState::compact(g);
    OracleState baseline = OracleState::baseline(g);
    for (int i = 0; i < g.num_edges(); ++i) {
      for (int j = i + 1; j < g.num_edges(); ++j) {
        EdgeId a = g.edges()[i].id;
        EdgeId b = g.edges()[j].id;
        Graph h = without(g, a, b);
        QueryAnswer x = query_fail_compact(compact, a, b);
        QueryAnswer y = query_fail_baseline(baseline, a, b);
        expect_answer(h, x);
        expect_answer(h, y);
        ++traces[x.trace];
      }
    }
  }
  EXPECT_GT(traces[QueryTrace::kBothIdle], 0);
  EXPECT_GT(traces[QueryTrace::kSingleReduction], 0);
  EXPECT_GT(traces[QueryTrace::kDoubleReduction], 0);
}

TEST(SensitivityTest, InsertionsAgreeWithRecomputation) {
  Rng rng(102);
  std::map<QueryTrace, int> traces;
  for (int round = 0; round < 25; ++round) {
    Graph g = testing::random_case(rng, Family::kSimple, 3, 9);
    OracleState compact = OracleState::compact(g);
    OracleState baseline = OracleState::baseline(g);
    std::uniform_int_distribution<int> pick(0, g.num_vertices() - 1);
    auto pair = [&] {
      VertexPair p{pick(rng), pick(rng)};
      while (p.v == p.u) p.v = pick(rng);
      return p;
    };
    for (int q = 0; q < 60; ++q) {
      VertexPair a = pair();
      VertexPair b = pair();
      Graph h = with(g, a, b);
      QueryAnswer x = query_insert_compact(compact, a, b);
      expect_answer(h, x);
      expect_answer(h, query_insert_baseline(baseline, a, b));
      ++traces[x.trace];
    }
  }
  EXPECT_GT(traces[QueryTrace::kNoAugment], 0);
  EXPECT_GT(traces[QueryTrace::kSingleAugment], 0);
  EXPECT_GT(traces[QueryTrace::kDoubleAugment], 0);
}

TEST(SensitivityTest, MixedQueriesOnTheBaseline) {
  Rng rng(103);
  for (int round = 0; round < 30; ++round) {
    Graph g = testing::random_case(rng, Family::kSimple, 3, 9);
    OracleState baseline = OracleState::baseline(g);
    std::uniform_int_distribution<int> pick(0, g.num_vertices() - 1);
    for (const Edge& e : g.edges()) {
      VertexPair p{pick(rng), pick(rng)};
      if (p.u == p.v) continue;
      QueryAnswer a = query_mixed_baseline(baseline, e.id, p);
      EXPECT_EQ(a.trace, QueryTrace::kMixed);
      expect_answer(add_edge(remove_edge(g, e.id), p.u, p.v, 1), a);
    }
  }
}

TEST(SensitivityTest, QueryErrors) {
  Graph g = fixtures::u1();
  OracleState compact = OracleState::compact(g);
  OracleState baseline = OracleState::baseline(g);
  auto code = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const CutError& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code([&] { query_fail(compact, 0, 9); }), ErrorCode::kUnknownEdge);
  EXPECT_EQ(code([&] { query_fail(compact, 2, 2); }), ErrorCode::kUnknownEdge);
  EXPECT_EQ(code([&] { query_insert(compact, {0, 7}, {0, 1}); }),
            ErrorCode::kUnknownVertex);
  EXPECT_EQ(code([&] { query_insert(baseline, {1, 1}, {0, 1}); }),
            ErrorCode::kInvalidGraph);
  EXPECT_EQ(code([&] { query_fail_compact(baseline, 0, 1); }),
            ErrorCode::kUnsupported);
  EXPECT_EQ(code([&] { query_mixed_baseline(compact, 0, {0, 1}); }),
            ErrorCode::kUnsupported);
  Graph multi = add_edge(g, 0, 1, 1);
  EXPECT_EQ(code([&] { OracleState::compact(multi); }),
            ErrorCode::kPreconditionViolated);
  EXPECT_EQ(code([&] { OracleState::baseline(fixtures::t1()); }),
            ErrorCode::kPreconditionViolated);
}

TEST(SensitivityTest, QueriesLeaveTheStateUntouched) {
  Rng rng(104);
  Graph g = testing::random_case(rng, Family::kSimple, 9, 9);
  for (OracleState state : {OracleState::compact(g), OracleState::baseline(g)}) {
    const std::uint64_t before = state.hash();
    std::uniform_int_distribution<int> edge(0, g.num_edges() - 1);
    std::uniform_int_distribution<int> vertex(0, g.num_vertices() - 1);
    for (int q = 0; q < 200; ++q) {
      int i = edge(rng), j = edge(rng);
      if (i != j) query_fail(state, g.edges()[i].id, g.edges()[j].id);
      VertexPair a{vertex(rng), vertex(rng)};
      VertexPair b{vertex(rng), vertex(rng)};
      if (a.u != a.v && b.u != b.v) query_insert(state, a, b);
      EXPECT_EQ(state.hash(), before);
    }
  }
}

TEST(SensitivityTest, CompactStateIsNoLargerThanTheGraph) {
  Rng rng(105);
  for (int round = 0; round < 40; ++round) {
    Graph g = testing::random_case(rng, Family::kSimple, 3, 12);
    OracleState compact = OracleState::compact(g);
    OracleState baseline = OracleState::baseline(g);
    EXPECT_LE(compact.num_units(), baseline.num_units());
    EXPECT_LE(compact.num_arc_pairs(), g.num_edges());
    EXPECT_EQ(baseline.num_arc_pairs(), g.num_edges());
    EXPECT_NE(compact.hash(), 0u);
  }
  EXPECT_EQ(trace_name(QueryTrace::kBothIdle), "both-idle");
}

}  // namespace
}  // namespace stcut
