#ifndef STCUT_PQ_DAG_H_
#define STCUT_PQ_DAG_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stcut/flow.h"
#include "stcut/graph.h"

namespace stcut {

struct DagArc {
  int from = 0;
  int to = 0;
  Capacity capacity = 0;
  std::vector<EdgeId> origins;  // edges whose residual arcs were merged here
};

// Condensed residual graph of a maximum flow. Node ids follow the smallest
// vertex they contain. Arcs run from the sink side towards the source side,
// so every suffix of topo that holds source_node is a minimum cut.
struct PqDag {
  VertexId source = 0;
  VertexId sink = 1;
  std::vector<std::vector<VertexId>> nodes;
  std::vector<int> node_of;
  int source_node = 0;
  int sink_node = 0;
  std::vector<DagArc> arcs;
  std::vector<int> topo;  // topo.front() == sink_node
  std::vector<int> topo_position;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  std::vector<VertexId> expand(std::span<const int> node_set) const;
  std::vector<int> nodes_after(int mu) const;
  std::vector<int> nodes_before(int mu) const;
  // Vertices of the suffix of topo starting at position p.
  std::vector<VertexId> suffix_vertices(int position) const;
};

struct Condensation {
  std::vector<int> component;
  int count = 0;
};

// Iterative Tarjan over arcs of positive capacity.
Condensation strongly_connected_components(const ResidualGraph& r);

// Topological order of a DAG that starts with `first` and ends with `last`.
// Ties go to the smallest node id. Throws Internal if no such order exists.
std::vector<int> terminal_topological_order(
    int num_nodes, const std::vector<std::pair<int, int>>& arcs, int first,
    int last);

// Directed inputs also merge everything reachable from the source node into
// it and everything reaching the sink node into it.
PqDag build_pq_dag(const Graph& g, const FlowAssignment& f);
PqDag build_pq_dag(const ResidualGraph& r, VertexId source, VertexId sink,
                   bool merge_terminals);

// The side is a union of nodes containing source_node, avoiding sink_node,
// with no arc leaving it.
bool is_one_transversal(const PqDag& d, std::span<const VertexId> side);

// Residual graph with the nodes before mu contracted into t' and the nodes
// after mu contracted into s'.
Contraction build_g_mu(const PqDag& d, const ResidualGraph& r, int mu);
// Same contraction applied to the undirected input itself.
Contraction build_g_mu_undirected(const Graph& g, const PqDag& d, int mu);

std::string pq_dag_dot(const PqDag& d);

}  // namespace stcut

#endif  // STCUT_PQ_DAG_H_
