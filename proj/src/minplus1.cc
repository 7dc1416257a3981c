#include "stcut/minplus1.h"

#include <algorithm>
#include <string>

#include "stcut/dominator.h"
#include "stcut/errors.h"
#include "stcut/pq_dag.h"
#include "stcut/second_mincut.h"

namespace stcut {

FlowAssignment bidirected_flow(const Graph& g, const FlowAssignment& f) {
  if (g.directed()) return f;
  FlowAssignment out;
  out.value = f.value;
  for (Capacity x : f.flow) {
    out.flow.push_back(std::max<Capacity>(x, 0));
    out.flow.push_back(std::max<Capacity>(-x, 0));
  }
  return out;
}

namespace {

int count_set(const std::vector<char>& mask) {
  return static_cast<int>(std::count(mask.begin(), mask.end(), 1));
}

// Residual capacity one cut around the head of the first dominating arc,
// found by sending flow into a doubled arc from that head to the target.
std::optional<std::vector<VertexId>> one_mincut_side(const ResidualGraph& r,
                                                     VertexId root,
                                                     VertexId target) {
  std::vector<DominatingArc> bridges = dominating_arcs(r, root);
  if (bridges.empty()) return std::nullopt;
  Graph forced = add_edge(residual_as_graph(r, root, target),
                          bridges.front().head, target, 2);
  MaxFlowResult mf = max_flow(forced);
  if (mf.flow.value != 1) {
    fail(ErrorCode::kInternal, "dominating arc did not give a unit cut");
  }
  return mf.mincut.side;
}

Cut verified(const Graph& g, const std::vector<VertexId>& side,
             Capacity expected) {
  Cut cut = cut_capacity(g, side);
  if (cut.capacity != expected) {
    fail(ErrorCode::kInternal, "cut capacity " +
                                   std::to_string(cut.capacity) +
                                   " where " + std::to_string(expected) +
                                   " was expected");
  }
  return cut;
}

}  // namespace

std::optional<Cut> minplus1_one_mincut(const Graph& g,
                                       const FlowAssignment& f) {
  Graph gd = to_bidirected(g);
  FlowAssignment fd = bidirected_flow(g, f);
  ResidualGraph r = residual(gd, fd);
  const int n = g.num_vertices();
  std::optional<std::vector<VertexId>> side;
  if (count_set(r.reachable_from(g.source())) == n - 1) {
    side = one_mincut_side(r, g.source(), g.sink());
  } else if (count_set(r.reaching(g.sink())) == n - 1) {
    auto flipped = one_mincut_side(r.transposed(), g.sink(), g.source());
    if (flipped) {
      std::vector<char> mask = side_mask(n, *flipped);
      for (char& c : mask) c = !c;
      side = mask_side(mask);
    }
  } else {
    fail(ErrorCode::kPreconditionViolated,
         "residual graph admits more than one minimum cut");
  }
  if (!side) return std::nullopt;
  return verified(g, *side, f.value + 1);
}

std::optional<Cut> minplus1(const Graph& g, const FlowAssignment& f) {
  Graph gd = to_bidirected(g);
  FlowAssignment fd = bidirected_flow(g, f);
  ResidualGraph r = residual(gd, fd);
  PqDag d = build_pq_dag(r, g.source(), g.sink(), true);
  const Capacity inf = infinity_proxy(gd);

  for (int mu : d.topo) {
    if (d.nodes[mu].size() < 2) continue;
    Contraction c = build_g_mu(d, r, mu);
    const Graph& h = c.graph;
    ResidualGraph hr = residual(h, zero_flow(h));
    const bool source_alone = count_set(hr.reachable_from(h.source())) == 1;
    const bool sink_alone = count_set(hr.reaching(h.sink())) == 1;
    std::vector<Graph> jobs;
    if (source_alone && sink_alone) {
      VertexId u = -1;
      for (VertexId x = 0; x < h.num_vertices() && u < 0; ++x) {
        if (x != h.source() && x != h.sink()) u = x;
      }
      jobs.push_back(add_edge(h, h.source(), u, inf));
      jobs.push_back(add_edge(h, u, h.sink(), inf));
    } else {
      jobs.push_back(h);
    }
    for (const Graph& job : jobs) {
      auto local = minplus1_one_mincut(job, zero_flow(job));
      if (local) return verified(g, c.expand(local->side), f.value + 1);
    }
  }

  // Node-respecting cuts whose only leaving arc has capacity one.
  std::vector<std::vector<std::pair<int, int>>> succ(d.num_nodes());
  for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) {
    succ[d.arcs[a].from].emplace_back(d.arcs[a].to, a);
  }
  for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) {
    const DagArc& arc = d.arcs[a];
    if (arc.capacity != 1 || arc.from == d.sink_node ||
        arc.to == d.source_node) {
      continue;
    }
    std::vector<char> in_set(d.num_nodes(), 0);
    std::vector<int> stack{d.source_node, arc.from};
    in_set[d.source_node] = in_set[arc.from] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [y, via] : succ[x]) {
        if (via == a || in_set[y]) continue;
        in_set[y] = 1;
        stack.push_back(y);
      }
    }
    if (in_set[arc.to] || in_set[d.sink_node]) continue;
    std::vector<int> nodes;
    for (int mu = 0; mu < d.num_nodes(); ++mu) {
      if (in_set[mu]) nodes.push_back(mu);
    }
    return verified(g, d.expand(nodes), f.value + 1);
  }
  return std::nullopt;
}

std::optional<Cut> minplus1(const Graph& g) {
  return minplus1(g, max_flow(g).flow);
}

}  // namespace stcut
