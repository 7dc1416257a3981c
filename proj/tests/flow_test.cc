#include <gtest/gtest.h>

#include <algorithm>

#include "stcut/errors.h"
#include "stcut/fixtures.h"
#include "stcut/flow.h"
#include "test_util.h"

namespace stcut {
namespace {

using testing::Family;

std::vector<Capacity> capacities(const ResidualGraph& r) {
  std::vector<Capacity> out;
  for (int a = 0; a < r.num_arcs(); ++a) out.push_back(r.arc(a).capacity);
  return out;
}

TEST(FlowTest, FixtureFlows) {
  MaxFlowResult t1 = max_flow(fixtures::t1());
  EXPECT_EQ(t1.flow.value, 2);
  EXPECT_EQ(t1.mincut.side, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(t1.flow.flow, (std::vector<Capacity>{1, 1, 1}));

  MaxFlowResult u1 = max_flow(fixtures::u1());
  EXPECT_EQ(u1.flow.value, 2);
  EXPECT_EQ(u1.flow.flow, (std::vector<Capacity>{1, 1, 1, 1, 0}));
  EXPECT_EQ(u1.mincut.side, (std::vector<VertexId>{0}));

  EXPECT_EQ(max_flow(fixtures::two()).flow.value, 2);
  EXPECT_EQ(max_flow(fixtures::p3()).flow.value, 1);
  EXPECT_EQ(max_flow(fixtures::star(4)).flow.value, 1);
}

TEST(FlowTest, MatchesEnumeratedMincut) {
  Rng rng(21);
  for (int round = 0; round < 120; ++round) {
    Graph g = testing::random_case(rng, static_cast<Family>(round % 4), 2, 8);
    MaxFlowResult mf = max_flow(g);
    EXPECT_NO_THROW(validate_flow(g, mf.flow));
    EXPECT_EQ(mf.flow.value, testing::naive_summary(g).lambda);
    EXPECT_EQ(mf.mincut.capacity, mf.flow.value);
    EXPECT_EQ(testing::naive_capacity(
                  g, testing::to_mask(g.num_vertices(), mf.mincut.side)),
              mf.flow.value);
  }
}

TEST(FlowTest, ResidualIdentityOnEveryCut) {
  Rng rng(22);
  for (int round = 0; round < 80; ++round) {
    Graph g = testing::random_case(rng, static_cast<Family>(round % 4), 3, 8);
    MaxFlowResult mf = max_flow(g);
    ResidualGraph r = residual(g, mf.flow);
    for (const testing::NaiveCut& c : testing::naive_st_cuts(g)) {
      EXPECT_EQ(c.capacity - mf.flow.value, r.out_capacity(c.mask));
    }
  }
}

TEST(FlowTest, ResidualConventions) {
  Graph u = Graph::from_triples(2, 0, 1, false, {{0, 1, 3}});
  FlowAssignment f{{-2}, -2};
  ResidualGraph r = residual(u, zero_flow(u));
  EXPECT_EQ(r.arc(0).capacity, 3);
  EXPECT_EQ(r.arc(1).capacity, 3);
  Graph d = Graph::from_triples(2, 0, 1, true, {{0, 1, 3}});
  FlowAssignment fd{{2}, 2};
  ResidualGraph rd = residual(d, fd);
  EXPECT_EQ(rd.arc(0).capacity, 1);
  EXPECT_EQ(rd.arc(1).capacity, 2);
  EXPECT_EQ(flow_from_residual(d, rd), fd);
  Graph as_graph = residual_as_graph(rd, 0, 1);
  EXPECT_EQ(as_graph.num_edges(), 2);
}

TEST(FlowTest, ValidateFlowRejectsViolations) {
  Graph g = fixtures::t1();
  EXPECT_THROW(validate_flow(g, {{3, 1, 1}, 4}), CutError);
  EXPECT_THROW(validate_flow(g, {{1, 0, 1}, 2}), CutError);
  EXPECT_THROW(validate_flow(g, {{1, 1, 1}, 3}), CutError);
  EXPECT_THROW(validate_flow(g, {{1, 1}, 2}), CutError);
  EXPECT_NO_THROW(validate_flow(g, {{1, 1, 1}, 2}));
}

TEST(FlowTest, UpdatePathIsAnInvolution) {
  Rng rng(23);
  for (int round = 0; round < 60; ++round) {
    Graph g = testing::random_case(rng, static_cast<Family>(round % 4), 3, 8);
    ResidualGraph r = residual(g, max_flow(g).flow);
    auto path = r.find_path(g.sink(), g.source());
    if (!path || path->empty()) continue;
    ResidualGraph once = update_path(r, *path);
    std::vector<int> back;
    for (auto it = path->rbegin(); it != path->rend(); ++it) {
      back.push_back(ResidualGraph::twin(*it));
    }
    EXPECT_EQ(capacities(update_path(once, back)), capacities(r));
  }
}

TEST(FlowTest, UpdatePathChecksItsInput) {
  Graph g = fixtures::t1();
  ResidualGraph r = residual(g, zero_flow(g));
  std::vector<int> broken{0, 4};
  EXPECT_THROW(update_path(r, broken), CutError);
  std::vector<int> absent{1};
  EXPECT_THROW(update_path(r, absent), CutError);
  std::vector<VertexId> walk{0, 1, 2};
  ResidualGraph moved = update_path_vertices(r, walk);
  EXPECT_EQ(moved.arc(0).capacity, 1);
  EXPECT_EQ(moved.arc(2).capacity, 0);
  std::vector<VertexId> missing{2, 0};
  EXPECT_THROW(update_path_vertices(r, missing), CutError);
}

TEST(FlowTest, CycleCancellationKeepsValueAndRemovesCycles) {
  // A directed triangle of flow rides on top of a unit s-t path.
  Graph g = Graph::from_triples(
      4, 0, 3, true, {{0, 1, 1}, {1, 3, 1}, {1, 2, 1}, {2, 0, 1}, {0, 1, 1}});
  FlowAssignment f{{1, 1, 1, 1, 1}, 1};
  ASSERT_NO_THROW(validate_flow(g, f));
  FlowAssignment clean = cancel_flow_cycles(g, f);
  EXPECT_EQ(clean.value, 1);
  EXPECT_NO_THROW(validate_flow(g, clean));
  int used = 0;
  for (Capacity x : clean.flow) used += x != 0;
  EXPECT_EQ(used, 2);

  Rng rng(24);
  for (int round = 0; round < 60; ++round) {
    Graph h = testing::random_case(rng, Family::kUndirectedMulti, 3, 8);
    FlowAssignment fc = cancel_flow_cycles(h, max_flow(h).flow);
    ASSERT_NO_THROW(validate_flow(h, fc));
    // No directed cycle remains among flow-carrying orientations.
    std::vector<std::vector<int>> succ(h.num_vertices());
    for (int i = 0; i < h.num_edges(); ++i) {
      const Edge& e = h.edges()[i];
      if (fc.flow[i] > 0) succ[e.u].push_back(e.v);
      if (fc.flow[i] < 0) succ[e.v].push_back(e.u);
    }
    std::vector<int> state(h.num_vertices(), 0);
    bool cyclic = false;
    std::function<void(int)> dfs = [&](int v) {
      state[v] = 1;
      for (int w : succ[v]) {
        if (state[w] == 1) cyclic = true;
        if (state[w] == 0) dfs(w);
      }
      state[v] = 2;
    };
    for (int v = 0; v < h.num_vertices(); ++v) {
      if (state[v] == 0) dfs(v);
    }
    EXPECT_FALSE(cyclic);
  }
}

TEST(FlowTest, ReduceFlowThroughEdge) {
  Rng rng(25);
  int checked = 0;
  for (int round = 0; round < 100; ++round) {
    Graph g = testing::random_case(rng, Family::kSimple, 3, 9);
    FlowAssignment f = max_flow(g).flow;
    for (int i = 0; i < g.num_edges(); ++i) {
      if (f.flow[i] == 0) continue;
      EdgeId id = g.edges()[i].id;
      ReducedFlow rf = reduce_flow_through_edge(g, f, id);
      EXPECT_FALSE(rf.graph.has_edge(id));
      EXPECT_NO_THROW(validate_flow(rf.graph, rf.flow));
      EXPECT_EQ(rf.flow.value, f.value - 1);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
  Graph u1 = fixtures::u1();
  FlowAssignment f = max_flow(u1).flow;
  EXPECT_THROW(reduce_flow_through_edge(u1, f, 4), CutError);
  EXPECT_THROW(reduce_flow_through_edge(u1, f, 9), CutError);
}

TEST(FlowTest, ArbitraryTerminals) {
  Graph g = fixtures::u1();
  EXPECT_EQ(max_flow(g, 1, 2).flow.value, 3);
  EXPECT_EQ(max_flow(fixtures::t1(), 2, 0).flow.value, 0);
}

}  // namespace
}  // namespace stcut
