#include "stcut/second_mincut.h"

#include <algorithm>
#include <string>
#include <tuple>

#include "stcut/errors.h"
#include "stcut/flow.h"
#include "stcut/global_mincut.h"

namespace stcut {

Capacity infinity_proxy(const Graph& g) { return g.total_capacity() + 1; }

std::optional<NonTransversalCandidate> non_transversal_candidate(
    const PqDag& d) {
  const int k = d.num_nodes();
  Capacity inf = 1;
  for (const DagArc& arc : d.arcs) inf += arc.capacity;
  std::optional<NonTransversalCandidate> best;
  std::vector<VertexId> best_side;
  std::int64_t calls = 0;
  for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) {
    const DagArc& forced = d.arcs[a];
    if (forced.from == d.sink_node || forced.to == d.source_node) continue;
    const VertexId super_source = k;
    const VertexId super_sink = k + 1;
    std::vector<Edge> edges;
    for (const DagArc& arc : d.arcs) {
      edges.push_back({static_cast<EdgeId>(edges.size()), arc.from, arc.to,
                       arc.capacity});
    }
    for (auto [u, v] : {std::pair{super_source, d.source_node},
                        std::pair{super_source, forced.from},
                        std::pair{d.sink_node, super_sink},
                        std::pair{forced.to, super_sink}}) {
      edges.push_back({static_cast<EdgeId>(edges.size()), u, v, inf});
    }
    Graph network(k + 2, super_source, super_sink, true, std::move(edges));
    MaxFlowResult mf = max_flow(network);
    ++calls;
    std::vector<int> nodes;
    for (VertexId v : mf.mincut.side) {
      if (v != super_source) nodes.push_back(v);
    }
    std::vector<VertexId> side = d.expand(nodes);
    Capacity value = mf.flow.value;
    if (!best || std::tie(value, side) < std::tie(best->value, best_side)) {
      best = NonTransversalCandidate{nodes, value, a, 0};
      best_side = side;
    }
  }
  if (best) best->maxflow_calls = calls;
  return best;
}

namespace {

struct Candidate {
  Cut cut;
  SecondCutSource source;
  int node = -1;
  int arc = -1;
};

bool better(const Candidate& a, const Candidate& b) {
  return std::tie(a.cut.capacity, a.source, a.cut.side) <
         std::tie(b.cut.capacity, b.source, b.cut.side);
}

struct Setup {
  Graph graph;
  FlowAssignment flow;
  Capacity lambda = 0;
  ResidualGraph residual{0};
  PqDag dag;
};

Setup prepare(const Graph& input) {
  Setup s{to_bidirected(input), {}, 0, ResidualGraph(0), {}};
  MaxFlowResult mf = max_flow(s.graph);
  s.flow = mf.flow;
  s.lambda = mf.flow.value;
  s.residual = residual(s.graph, s.flow);
  s.dag = build_pq_dag(s.residual, s.graph.source(), s.graph.sink(), true);
  return s;
}

Candidate checked(const Graph& g, std::vector<VertexId> side,
                  Capacity expected, SecondCutSource source, int node,
                  int arc) {
  Candidate c{cut_capacity(g, side), source, node, arc};
  if (c.cut.capacity != expected) {
    fail(ErrorCode::kInternal,
         "candidate capacity " + std::to_string(c.cut.capacity) +
             " differs from the predicted " + std::to_string(expected));
  }
  return c;
}

void add_non_transversal(const Graph& g, const Setup& s,
                         std::vector<Candidate>& pool,
                         SecondMincutResult& result) {
  auto b = non_transversal_candidate(s.dag);
  if (!b) return;
  result.candidate_maxflow_calls = b->maxflow_calls;
  pool.push_back(checked(g, s.dag.expand(b->nodes), s.lambda + b->value,
                         SecondCutSource::kNonTransversal, -1, b->arc));
}

SecondMincutResult finish(const Setup& s, std::vector<Candidate>& pool,
                          SecondMincutResult result) {
  if (pool.empty()) {
    fail(ErrorCode::kNoSecondMincut, "every (s,t)-cut is a minimum cut");
  }
  const Candidate* best = &pool.front();
  for (const Candidate& c : pool) {
    if (better(c, *best)) best = &c;
  }
  result.cut = best->cut;
  result.lambda = s.lambda;
  result.source = best->source;
  result.node = best->node;
  result.arc = best->arc;
  return result;
}

}  // namespace

SecondMincutResult second_mincut(const Graph& g) {
  Setup s = prepare(g);
  const PqDag& d = s.dag;
  const Capacity inf = infinity_proxy(s.graph);
  SecondMincutResult result;
  result.maxflow_calls = 1;
  std::vector<Candidate> pool;
  std::vector<int> local(g.num_vertices(), -1);
  for (int mu : d.topo) {
    const std::vector<VertexId>& members = d.nodes[mu];
    const int k = static_cast<int>(members.size());
    if (k < 2) continue;
    ++result.processed_nodes;
    for (int i = 0; i < k; ++i) local[members[i]] = i;
    std::vector<Edge> edges;
    auto push_edge = [&](VertexId u, VertexId v, Capacity cap) {
      edges.push_back({static_cast<EdgeId>(edges.size()), u, v, cap});
    };
    for (const ResidualArc& arc : s.residual.present_arcs()) {
      if (d.node_of[arc.from] == mu && d.node_of[arc.to] == mu) {
        push_edge(local[arc.from], local[arc.to], arc.capacity);
      }
    }
    const bool holds_source = mu == d.source_node;
    const bool holds_sink = mu == d.sink_node;
    for (int i = 0; i < k; ++i) {
      if (holds_source && members[i] != g.source()) {
        push_edge(i, local[g.source()], inf);
      }
      if (holds_sink && members[i] != g.sink()) {
        push_edge(local[g.sink()], i, inf);
      }
    }
    GlobalCutResult gm = global_mincut(Graph(k, 0, 1, true, std::move(edges)));
    ++result.global_mincut_calls;
    result.maxflow_calls += gm.maxflow_calls;
    if (gm.capacity >= inf) continue;
    std::vector<VertexId> side;
    for (int i : gm.side) side.push_back(members[i]);
    if (!holds_source) {
      std::vector<VertexId> suffix = d.expand(d.nodes_after(mu));
      side.insert(side.end(), suffix.begin(), suffix.end());
    }
    pool.push_back(checked(g, side, s.lambda + gm.capacity,
                           SecondCutSource::kNodeSubdivision, mu, -1));
  }
  add_non_transversal(g, s, pool, result);
  return finish(s, pool, result);
}

namespace {

// g has the single minimum cut V \ {t} (sink_side) or {s}. Forces one
// internal vertex across per max flow.
std::optional<std::pair<std::vector<VertexId>, Capacity>> one_mincut_second(
    const Graph& g, bool sink_side, Capacity inf, std::int64_t& calls) {
  std::optional<std::pair<std::vector<VertexId>, Capacity>> best;
  for (VertexId x = 0; x < g.num_vertices(); ++x) {
    if (x == g.source() || x == g.sink()) continue;
    Graph forced = sink_side ? add_edge(g, x, g.sink(), inf)
                             : add_edge(g, g.source(), x, inf);
    MaxFlowResult mf = max_flow(forced);
    ++calls;
    Capacity value = mf.flow.value;
    if (value >= inf) continue;
    if (!best || std::tie(value, mf.mincut.side) <
                     std::tie(best->second, best->first)) {
      best.emplace(mf.mincut.side, value);
    }
  }
  return best;
}

}  // namespace

SecondMincutResult second_mincut_covering(const Graph& g) {
  Setup s = prepare(g);
  const PqDag& d = s.dag;
  const Capacity inf = infinity_proxy(s.graph);
  SecondMincutResult result;
  result.maxflow_calls = 1;
  std::vector<Candidate> pool;
  for (int mu : d.topo) {
    if (d.nodes[mu].size() < 2) continue;
    ++result.processed_nodes;
    Contraction c = build_g_mu(d, s.residual, mu);
    const Graph& h = c.graph;
    ResidualGraph hr = residual(h, zero_flow(h));
    std::vector<char> from_source = hr.reachable_from(h.source());
    std::vector<char> to_sink = hr.reaching(h.sink());
    const bool source_alone =
        std::count(from_source.begin(), from_source.end(), 1) == 1;
    const bool sink_alone = std::count(to_sink.begin(), to_sink.end(), 1) == 1;
    std::vector<std::pair<Graph, bool>> jobs;
    if (source_alone && sink_alone) {
      VertexId u = -1;
      for (VertexId x = 0; x < h.num_vertices() && u < 0; ++x) {
        if (x != h.source() && x != h.sink()) u = x;
      }
      jobs.emplace_back(add_edge(h, h.source(), u, inf), true);
      jobs.emplace_back(add_edge(h, u, h.sink(), inf), false);
    } else if (sink_alone) {
      jobs.emplace_back(h, true);
    } else if (source_alone) {
      jobs.emplace_back(h, false);
    } else {
      fail(ErrorCode::kInternal, "contracted node has an unexpected cut");
    }
    for (const auto& [job, sink_side] : jobs) {
      auto found = one_mincut_second(job, sink_side, inf, result.maxflow_calls);
      if (!found) continue;
      pool.push_back(checked(g, c.expand(found->first),
                             s.lambda + found->second,
                             SecondCutSource::kNodeSubdivision, mu, -1));
    }
  }
  add_non_transversal(g, s, pool, result);
  return finish(s, pool, result);
}

}  // namespace stcut
