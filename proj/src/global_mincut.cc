#include "stcut/global_mincut.h"

#include <algorithm>
#include <limits>

#include "stcut/errors.h"
#include "stcut/flow.h"
#include "stcut/pq_dag.h"

namespace stcut {

GlobalCutResult global_mincut(const Graph& g) {
  GlobalCutResult best;
  best.capacity = std::numeric_limits<Capacity>::max();
  const VertexId pivot = 0;
  for (VertexId u = 1; u < g.num_vertices(); ++u) {
    for (bool outward : {true, false}) {
      MaxFlowResult r = outward ? max_flow(g, pivot, u) : max_flow(g, u, pivot);
      ++best.maxflow_calls;
      if (r.mincut.capacity < best.capacity) {
        best.capacity = r.mincut.capacity;
        best.side = r.mincut.side;
      }
    }
  }
  return best;
}

GlobalCutResult global_mincut_via_second_mincut(const Graph& g,
                                                const SecondMincutFn& second) {
  if (!g.directed()) {
    fail(ErrorCode::kUnsupported, "expects a directed graph");
  }
  const int n = g.num_vertices();
  const VertexId s1 = n;
  const VertexId t1 = n + 1;
  Graph augmented(n + 2, s1, t1, true, g.edges());

  GlobalCutResult result;
  // With f = 0 the residual graph is g itself, so the nodes other than the
  // two isolated terminals are the strong components of g.
  PqDag d = build_pq_dag(augmented, zero_flow(augmented));
  ++result.maxflow_calls;
  std::vector<VertexId> side;
  if (d.num_nodes() >= 4) {
    // Zero-capacity cuts exist: the node just before {s1} has no way out.
    side = d.nodes[d.topo[d.num_nodes() - 2]];
  } else {
    Cut c = second(augmented);
    ++result.second_mincut_calls;
    for (VertexId v : c.side) {
      if (v != s1) side.push_back(v);
    }
  }
  if (side.empty() || static_cast<int>(side.size()) == n) {
    fail(ErrorCode::kInternal, "reduction produced a trivial side");
  }
  Cut cut = cut_capacity(g, side);
  result.side = cut.side;
  result.capacity = cut.capacity;
  return result;
}

}  // namespace stcut
