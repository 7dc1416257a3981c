// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "stcut/anchors.h"
#include "stcut/cut_oracle.h"
#include "stcut/dimacs.h"
#include "stcut/errors.h"
#include "stcut/fixtures.h"
#include "stcut/flow.h"
#include "stcut/global_mincut.h"
#include "stcut/minplus1.h"
#include "stcut/pq_dag.h"
#include "stcut/second_mincut.h"
#include "stcut/sensitivity.h"
#include "test_util.h"

namespace stcut {
namespace {

using testing::Family;

struct Outcome {
  bool pass = true;
  std::string detail;
  int instances = 0;

  void expect(bool ok, const std::string& what) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    detail = what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const Graph& g) {
  std::string text = write_graph(g);
  for (char& c : text) {
    if (c == '\n') c = ';';
  }
  return text;
}

Graph random_directed_case(Rng& rng, int min_n, int max_n) {
  int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  double p = std::uniform_real_distribution<double>(0.3, 0.9)(rng);
  return random_directed(rng, n, p, 5);
}

Outcome second_mincut_exactness() {
  Outcome o;
  Rng rng(1001);
  auto start = Clock::now();
  for (int i = 0; i < 300; ++i) {
    Graph g = random_directed_case(rng, 4, 8);
    testing::NaiveSummary truth = testing::naive_summary(g);
    for (bool covering : {false, true}) {
      try {
        SecondMincutResult r =
            covering ? second_mincut_covering(g) : second_mincut(g);
        o.expect(truth.second && r.cut.capacity == *truth.second &&
                     cut_capacity(g, r.cut.side).capacity == r.cut.capacity,
                 "wrong second mincut on " + describe(g));
      } catch (const CutError& e) {
        o.expect(e.code() == ErrorCode::kNoSecondMincut && !truth.second,
                 std::string(e.what()) + " on " + describe(g));
      }
    }
    ++o.instances;
  }
  double elapsed = seconds_since(start);
  o.expect(elapsed < 60, "took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome min_plus_delta_identity() {
  Outcome o;
  std::vector<Graph> cases{fixtures::t1(),      fixtures::two(),
                           fixtures::p3(),      fixtures::p3(true),
                           fixtures::u1(),      fixtures::dense_idle(4)};
  for (int k = 2; k <= 6; ++k) cases.push_back(fixtures::star(k));
  Rng rng(1002);
  for (int i = 0; i < 100; ++i) {
    cases.push_back(testing::random_case(rng, static_cast<Family>(i % 4), 2, 8));
  }
  for (const Graph& g : cases) {
    MaxFlowResult mf = max_flow(g);
    ResidualGraph r = residual(g, mf.flow);
    for (const testing::NaiveCut& c : testing::naive_st_cuts(g)) {
      o.expect(c.capacity - mf.flow.value == r.out_capacity(c.mask),
               "identity fails on " + describe(g));
    }
    ++o.instances;
  }
  return o;
}

Outcome min_plus_one_flow_condition() {
  Outcome o;
  Rng rng(1003);
  for (int i = 0; i < 200; ++i) {
    Graph g = testing::random_case(rng, Family::kUndirectedMulti, 2, 8);
    FlowAssignment f = max_flow(g).flow;
    for (const testing::NaiveCut& c : testing::naive_st_cuts(g)) {
      bool condition =
          check_min_plus1_flow_characterization(g, f, mask_side(c.mask));
      o.expect(condition == (c.capacity == f.value + 1),
               "counterexample on " + describe(g));
    }
    ++o.instances;
  }
  return o;
}

Outcome anchors_match() {
  Outcome o;
  Rng rng(1004);
  for (int i = 0; i < 200; ++i) {
    Graph g = testing::random_case(rng, Family::kUndirectedMulti, 2, 8);
    FlowAssignment f = cancel_flow_cycles(g, max_flow(g).flow);
    std::vector<EdgeId> a = compute_anchors(g, f);
    o.expect(a == brute_anchors(g, f), "anchor sets differ on " + describe(g));
    o.expect(a == testing::naive_anchors(g, f),
             "anchor sets differ from naive on " + describe(g));
    o.expect(static_cast<int>(a.size()) <= std::max(0, g.num_vertices() - 2),
             "too many anchors on " + describe(g));
    ++o.instances;
  }
  for (int k = 2; k <= 6; ++k) {
    Graph g = fixtures::star(k);
    FlowAssignment f = cancel_flow_cycles(g, max_flow(g).flow);
    o.expect(static_cast<int>(compute_anchors(g, f).size()) ==
                 g.num_vertices() - 2,
             "STAR(" + std::to_string(k) + ") misses the bound");
    ++o.instances;
  }
  return o;
}

Outcome structure_classifies() {
  Outcome o;
  std::vector<Graph> cases{fixtures::u1()};
  Rng rng(1005);
  for (int i = 0; i < 100; ++i) {
    cases.push_back(testing::random_case(rng, Family::kUndirectedMulti, 3, 12));
  }
  for (const Graph& g : cases) {
    AnchorStructure st = build_structure(g);
    CutInventory inv = enumerate_cuts(g);
    for (std::uint32_t m = 0; m < inv.num_masks(); ++m) {
      std::vector<VertexId> side = inv.side(m);
      o.expect(classify_cut(st, side) == brute_classify(inv, side),
               "classification differs on " + describe(g));
    }
    ++o.instances;
  }
  return o;
}

void check_answer(Outcome& o, const Graph& updated, const QueryAnswer& a,
                  const std::string& what) {
  Capacity truth = max_flow(updated).flow.value;
  bool cut_ok = is_st_cut(updated, a.cut_side) &&
                cut_capacity(updated, a.cut_side).capacity == a.capacity;
  o.expect(a.capacity == truth && cut_ok, what);
}

Outcome dual_edge_oracle() {
  Outcome o;
  Rng rng(1006);
  auto start = Clock::now();
  for (int i = 0; i < 50; ++i) {
    Graph g = testing::random_case(rng, Family::kSimple, 3, 12);
    OracleState compact = OracleState::compact(g);
    OracleState baseline = OracleState::baseline(g);
    for (int x = 0; x < g.num_edges(); ++x) {
      for (int y = x + 1; y < g.num_edges(); ++y) {
        EdgeId a = g.edges()[x].id;
        EdgeId b = g.edges()[y].id;
        Graph h = remove_edge(remove_edge(g, a), b);
        QueryAnswer c = query_fail_compact(compact, a, b);
        QueryAnswer r = query_fail_baseline(baseline, a, b);
        std::string what = "failure of " + std::to_string(a + 1) + "," +
                           std::to_string(b + 1) + " on " + describe(g);
        check_answer(o, h, c, "compact " + what);
        check_answer(o, h, r, "baseline " + what);
      }
    }
    std::uniform_int_distribution<int> pick(0, g.num_vertices() - 1);
    auto pair = [&] {
      VertexPair p{pick(rng), pick(rng)};
      while (p.u == p.v) p.v = pick(rng);
      return p;
    };
    for (int q = 0; q < 200; ++q) {
      VertexPair a = pair();
      VertexPair b = pair();
      Graph h = add_edge(add_edge(g, a.u, a.v, 1), b.u, b.v, 1);
      std::string what = "insertion on " + describe(g);
      check_answer(o, h, query_insert_compact(compact, a, b), "compact " + what);
      check_answer(o, h, query_insert_baseline(baseline, a, b),
                   "baseline " + what);
    }
    ++o.instances;
  }
  double elapsed = seconds_since(start);
  o.expect(elapsed < 120, "took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome global_via_second() {
  Outcome o;
  Rng rng(1007);
  SecondMincutFn second = [](const Graph& h) { return second_mincut(h).cut; };
  for (int i = 0; i < 100; ++i) {
    Graph g = random_directed_case(rng, 2, 8);
    GlobalCutResult direct = global_mincut(g);
    GlobalCutResult reduced = global_mincut_via_second_mincut(g, second);
    o.expect(direct.capacity == reduced.capacity &&
                 direct.capacity == testing::naive_global_mincut(g),
             "global mincut differs on " + describe(g));
    try {
      SecondMincutResult r = second_mincut(g);
      o.expect(r.global_mincut_calls == r.processed_nodes,
               "call count differs from processed nodes on " + describe(g));
    } catch (const CutError& e) {
      o.expect(e.code() == ErrorCode::kNoSecondMincut, e.what());
    }
    ++o.instances;
  }
  return o;
}

Outcome min_plus_one_directed() {
  Outcome o;
  Rng rng(1008);
  for (int i = 0; i < 200; ++i) {
    int n = std::uniform_int_distribution<int>(2, 8)(rng);
    double p = std::uniform_real_distribution<double>(0.3, 0.9)(rng);
    Graph g = random_directed_multigraph(rng, n, p, 3);
    testing::NaiveSummary truth = testing::naive_summary(g);
    auto c = minplus1(g);
    o.expect(c.has_value() == truth.has_plus_one,
             "existence differs on " + describe(g));
    if (c) {
      o.expect(c->capacity == truth.lambda + 1 &&
                   cut_capacity(g, c->side).capacity == truth.lambda + 1,
               "wrong capacity on " + describe(g));
    }
    ++o.instances;
  }
  return o;
}

Outcome pq_dag_invariants() {
  Outcome o;
  Rng rng(1009);
  std::int64_t arcs = 0, bound = 0;
  for (int i = 0; i < 200; ++i) {
    Graph g = testing::random_case(rng, static_cast<Family>(i % 4), 3, 14);
    FlowAssignment f = max_flow(g).flow;
    PqDag d = build_pq_dag(g, f);
    for (int p = 1; p < d.num_nodes(); ++p) {
      o.expect(cut_capacity(g, d.suffix_vertices(p)).capacity == f.value,
               "suffix cut off lambda on " + describe(g));
    }
    if (!g.directed() && is_simple(g)) {
      for (const DagArc& arc : d.arcs) {
        for (EdgeId id : arc.origins) {
          o.expect(f.flow[*g.index_of(id)] != 0,
                   "idle edge between nodes on " + describe(g));
        }
      }
    }
    o.expect(static_cast<int>(d.arcs.size()) <= g.num_edges(),
             "more arcs than edges on " + describe(g));
    arcs += static_cast<std::int64_t>(d.arcs.size());
    bound += std::min<std::int64_t>(
        g.num_edges(),
        std::int64_t(g.num_vertices()) *
            std::int64_t(std::ceil(std::sqrt(double(f.value)))));
    ++o.instances;
  }
  std::printf("info criterion 9: total pq arcs %lld, total min(m, n*ceil(sqrt(lambda))) %lld\n",
              static_cast<long long>(arcs), static_cast<long long>(bound));
  return o;
}

Outcome state_isolation() {
  Outcome o;
  Rng rng(1010);
  Graph g = testing::random_case(rng, Family::kSimple, 12, 12);
  for (OracleState state : {OracleState::compact(g), OracleState::baseline(g)}) {
    const std::uint64_t before = state.hash();
    std::uniform_int_distribution<int> edge(0, g.num_edges() - 1);
    std::uniform_int_distribution<int> vertex(0, g.num_vertices() - 1);
    int issued = 0;
    while (issued < 1000) {
      if (issued % 2 == 0) {
        int i = edge(rng), j = edge(rng);
        if (i == j) continue;
        query_fail(state, g.edges()[i].id, g.edges()[j].id);
      } else {
        VertexPair a{vertex(rng), vertex(rng)};
        VertexPair b{vertex(rng), vertex(rng)};
        if (a.u == a.v || b.u == b.v) continue;
        query_insert(state, a, b);
      }
      ++issued;
      o.expect(state.hash() == before,
               "hash changed after query " + std::to_string(issued));
    }
    ++o.instances;
  }
  return o;
}

}  // namespace
}  // namespace stcut

int main() {
  using namespace stcut;
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "second mincut exactness", second_mincut_exactness},
      {2, "min+delta residual identity", min_plus_delta_identity},
      {3, "min+1 flow condition biconditional", min_plus_one_flow_condition},
      {4, "anchors match brute force", anchors_match},
      {5, "structure classification", structure_classifies},
      {6, "dual edge oracle", dual_edge_oracle},
      {7, "global mincut through second mincut", global_via_second},
      {8, "directed min+1 cut", min_plus_one_directed},
      {9, "pq dag invariants", pq_dag_invariants},
      {10, "oracle state isolation", state_isolation},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    std::printf("%s criterion %d: %s (%d instances, %.2f s)%s%s\n",
                o.pass ? "PASS" : "FAIL", c.number, c.name, o.instances,
                elapsed, o.detail.empty() ? "" : " ", o.detail.c_str());
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
