#include "stcut/pq_dag.h"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <tuple>

#include "stcut/errors.h"

namespace stcut {

std::vector<VertexId> PqDag::expand(std::span<const int> node_set) const {
  std::vector<VertexId> out;
  for (int mu : node_set) {
    out.insert(out.end(), nodes[mu].begin(), nodes[mu].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> PqDag::nodes_after(int mu) const {
  return {topo.begin() + topo_position[mu] + 1, topo.end()};
}

std::vector<int> PqDag::nodes_before(int mu) const {
  return {topo.begin(), topo.begin() + topo_position[mu]};
}

std::vector<VertexId> PqDag::suffix_vertices(int position) const {
  return expand(std::span<const int>(topo).subspan(position));
}

Condensation strongly_connected_components(const ResidualGraph& r) {
  const int n = r.num_vertices();
  Condensation out;
  out.component.assign(n, -1);
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  int counter = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<VertexId, size_t>> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      VertexId v = frames.back().first;
      size_t& next = frames.back().second;
      auto out_arcs = r.out_arcs(v);
      if (next < out_arcs.size()) {
        const ResidualArc& arc = r.arc(out_arcs[next++]);
        if (arc.capacity <= 0) continue;
        VertexId w = arc.to;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      frames.pop_back();
      if (!frames.empty()) {
        VertexId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] == index[v]) {
        while (true) {
          VertexId w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          out.component[w] = out.count;
          if (w == v) break;
        }
        ++out.count;
      }
    }
  }
  return out;
}

std::vector<int> terminal_topological_order(
    int num_nodes, const std::vector<std::pair<int, int>>& arcs, int first,
    int last) {
  std::vector<std::vector<int>> succ(num_nodes);
  std::vector<int> indegree(num_nodes, 0);
  for (auto [a, b] : arcs) {
    succ[a].push_back(b);
    ++indegree[b];
  }
  if (indegree[first] != 0 || (first != last && !succ[last].empty())) {
    fail(ErrorCode::kInternal, "terminal nodes are not at the DAG ends");
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  std::vector<int> order;
  auto release = [&](int node) {
    order.push_back(node);
    for (int b : succ[node]) {
      if (--indegree[b] == 0 && b != last && b != first) ready.push(b);
    }
  };
  for (int node = 0; node < num_nodes; ++node) {
    if (indegree[node] == 0 && node != first && node != last) ready.push(node);
  }
  release(first);
  while (!ready.empty()) {
    int node = ready.top();
    ready.pop();
    release(node);
  }
  if (last != first) {
    if (indegree[last] != 0) {
      fail(ErrorCode::kInternal, "residual condensation has a cycle");
    }
    order.push_back(last);
  }
  if (static_cast<int>(order.size()) != num_nodes) {
    fail(ErrorCode::kInternal, "residual condensation has a cycle");
  }
  return order;
}

namespace {

std::vector<char> closure(const std::vector<std::vector<int>>& adjacency,
                          int start) {
  std::vector<char> seen(adjacency.size(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adjacency[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

PqDag build_pq_dag(const ResidualGraph& r, VertexId source, VertexId sink,
                   bool merge_terminals) {
  const int n = r.num_vertices();
  Condensation scc = strongly_connected_components(r);
  std::vector<int> label = scc.component;
  if (merge_terminals) {
    std::vector<std::vector<int>> succ(scc.count);
    std::vector<std::vector<int>> pred(scc.count);
    for (int a = 0; a < r.num_arcs(); ++a) {
      const ResidualArc& arc = r.arc(a);
      int x = scc.component[arc.from];
      int y = scc.component[arc.to];
      if (arc.capacity <= 0 || x == y) continue;
      succ[x].push_back(y);
      pred[y].push_back(x);
    }
    const int s_comp = scc.component[source];
    const int t_comp = scc.component[sink];
    std::vector<char> from_source = closure(succ, s_comp);
    std::vector<char> to_sink = closure(pred, t_comp);
    for (VertexId v = 0; v < n; ++v) {
      int c = scc.component[v];
      if (from_source[c]) {
        label[v] = s_comp;
      } else if (to_sink[c]) {
        label[v] = t_comp;
      }
    }
  }
  if (label[source] == label[sink]) {
    fail(ErrorCode::kInfeasibleFlow, "residual graph still links s to t");
  }

  PqDag d;
  d.source = source;
  d.sink = sink;
  d.node_of.assign(n, -1);
  std::map<int, int> node_of_label;
  for (VertexId v = 0; v < n; ++v) {
    auto [it, inserted] =
        node_of_label.emplace(label[v], static_cast<int>(d.nodes.size()));
    if (inserted) d.nodes.emplace_back();
    d.nodes[it->second].push_back(v);
    d.node_of[v] = it->second;
  }
  d.source_node = d.node_of[source];
  d.sink_node = d.node_of[sink];

  std::map<std::pair<int, int>, int> arc_slot;
  for (int a = 0; a < r.num_arcs(); ++a) {
    const ResidualArc& arc = r.arc(a);
    int x = d.node_of[arc.from];
    int y = d.node_of[arc.to];
    if (arc.capacity <= 0 || x == y) continue;
    auto [it, inserted] =
        arc_slot.emplace(std::make_pair(x, y), static_cast<int>(d.arcs.size()));
    if (inserted) d.arcs.push_back({x, y, 0, {}});
    DagArc& target = d.arcs[it->second];
    target.capacity += arc.capacity;
    target.origins.push_back(arc.origin);
  }
  for (DagArc& arc : d.arcs) {
    std::sort(arc.origins.begin(), arc.origins.end());
    arc.origins.erase(std::unique(arc.origins.begin(), arc.origins.end()),
                      arc.origins.end());
  }
  std::sort(d.arcs.begin(), d.arcs.end(), [](const DagArc& a, const DagArc& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });

  std::vector<std::pair<int, int>> pairs;
  for (const DagArc& arc : d.arcs) pairs.emplace_back(arc.from, arc.to);
  d.topo = terminal_topological_order(d.num_nodes(), pairs, d.sink_node,
                                      d.source_node);
  d.topo_position.assign(d.num_nodes(), 0);
  for (int p = 0; p < d.num_nodes(); ++p) d.topo_position[d.topo[p]] = p;
  return d;
}

PqDag build_pq_dag(const Graph& g, const FlowAssignment& f) {
  return build_pq_dag(residual(g, f), g.source(), g.sink(), g.directed());
}

bool is_one_transversal(const PqDag& d, std::span<const VertexId> side) {
  const int n = static_cast<int>(d.node_of.size());
  std::vector<char> mask = side_mask(n, side);
  std::vector<int> members(d.num_nodes(), 0);
  for (VertexId v = 0; v < n; ++v) members[d.node_of[v]] += mask[v];
  std::vector<char> in_set(d.num_nodes(), 0);
  for (int mu = 0; mu < d.num_nodes(); ++mu) {
    int size = static_cast<int>(d.nodes[mu].size());
    if (members[mu] != 0 && members[mu] != size) return false;
    in_set[mu] = members[mu] == size;
  }
  if (!in_set[d.source_node] || in_set[d.sink_node]) return false;
  for (const DagArc& arc : d.arcs) {
    if (in_set[arc.from] && !in_set[arc.to]) return false;
  }
  return true;
}

namespace {

ContractionMap g_mu_groups(const PqDag& d, int mu) {
  if (mu < 0 || mu >= d.num_nodes()) {
    fail(ErrorCode::kPreconditionViolated, "node out of range");
  }
  ContractionMap map;
  map.groups.push_back(d.expand(d.nodes_before(mu)));
  map.groups.push_back(d.expand(d.nodes_after(mu)));
  return map;
}

}  // namespace

Contraction build_g_mu(const PqDag& d, const ResidualGraph& r, int mu) {
  return contract(residual_as_graph(r, d.source, d.sink), g_mu_groups(d, mu));
}

Contraction build_g_mu_undirected(const Graph& g, const PqDag& d, int mu) {
  return contract(g, g_mu_groups(d, mu));
}

std::string pq_dag_dot(const PqDag& d) {
  std::ostringstream out;
  out << "digraph pq {\n";
  for (int mu : d.topo) {
    out << "  n" << mu << " [label=\"";
    if (mu == d.source_node) out << "S: ";
    if (mu == d.sink_node) out << "T: ";
    for (size_t i = 0; i < d.nodes[mu].size(); ++i) {
      out << (i ? " " : "") << d.nodes[mu][i] + 1;
    }
    out << "\"];\n";
  }
  for (const DagArc& arc : d.arcs) {
    out << "  n" << arc.from << " -> n" << arc.to << " [label=\""
        << arc.capacity << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace stcut
