#ifndef STCUT_FLOW_H_
#define STCUT_FLOW_H_

#include <optional>
#include <span>
#include <vector>

#include "stcut/graph.h"

namespace stcut {

// Flow values are parallel to Graph::edges(). On undirected graphs the value
// is signed: positive means the flow runs from Edge::u to Edge::v.
struct FlowAssignment {
  std::vector<Capacity> flow;
  Capacity value = 0;

  bool carries(int index) const { return flow[index] != 0; }
  friend bool operator==(const FlowAssignment&,
                         const FlowAssignment&) = default;
};

inline constexpr EdgeId kArtificialArc = -2;

struct ResidualArc {
  VertexId from = 0;
  VertexId to = 0;
  Capacity capacity = 0;
  EdgeId origin = kArtificialArc;
};

// Arcs come in twin pairs (2k, 2k+1) with opposite orientation. Pushing a
// unit along an arc moves one unit of capacity onto its twin. Arcs of
// capacity zero are treated as absent.
class ResidualGraph {
 public:
  explicit ResidualGraph(int num_vertices);

  // Returns the index of the forward arc; the backward arc is index + 1.
  int add_arc_pair(VertexId from, VertexId to, Capacity forward,
                   Capacity backward, EdgeId origin);

  int num_vertices() const { return static_cast<int>(out_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const ResidualArc& arc(int a) const { return arcs_[a]; }
  static int twin(int a) { return a ^ 1; }
  std::span<const int> out_arcs(VertexId v) const { return out_[v]; }
  std::span<const int> in_arcs(VertexId v) const { return in_[v]; }

  void push(int a, Capacity amount);
  // Reverses one unit along each arc of a chained path.
  void reverse_path(std::span<const int> path);
  void clear_pair(int a);

  // Shortest path over arcs of positive capacity; empty when from == to.
  std::optional<std::vector<int>> find_path(VertexId from, VertexId to) const;
  std::vector<char> reachable_from(VertexId v) const;
  std::vector<char> reaching(VertexId v) const;

  // Arcs of positive capacity, in index order.
  std::vector<ResidualArc> present_arcs() const;
  Capacity out_capacity(const std::vector<char>& in_side) const;
  ResidualGraph transposed() const;

 private:
  std::vector<ResidualArc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

struct MaxFlowResult {
  FlowAssignment flow;
  Cut mincut;  // vertices reachable from the source in the residual graph
};

// Shortest augmenting paths. The returned flow is deterministic.
MaxFlowResult max_flow(const Graph& g);
MaxFlowResult max_flow(const Graph& g, VertexId from, VertexId to);

FlowAssignment zero_flow(const Graph& g);
// Throws InfeasibleFlow on a capacity or conservation violation, or when
// value disagrees with the net outflow of the source.
void validate_flow(const Graph& g, const FlowAssignment& f);

// Arc pair k belongs to edges()[k].
ResidualGraph residual(const Graph& g, const FlowAssignment& f);
FlowAssignment flow_from_residual(const Graph& g, const ResidualGraph& r);
// Directed graph on the present arcs; edge ids are arc indices.
Graph residual_as_graph(const ResidualGraph& r, VertexId source,
                        VertexId sink);

ResidualGraph update_path(const ResidualGraph& r, std::span<const int> path);
// Picks, for every step, the lowest-index present arc between the two
// vertices.
ResidualGraph update_path_vertices(const ResidualGraph& r,
                                   std::span<const VertexId> vertices);

// Removes every flow cycle. Flow-carrying edges are never added.
FlowAssignment cancel_flow_cycles(const Graph& g, const FlowAssignment& f);

struct ReducedFlow {
  Graph graph;  // g without e
  FlowAssignment flow;
  ResidualGraph residual;
};

// Requires |f(e)| = 1. Lowers the flow value by one so that e carries
// nothing, then drops e.
ReducedFlow reduce_flow_through_edge(const Graph& g, const FlowAssignment& f,
                                     EdgeId e);

}  // namespace stcut

#endif  // STCUT_FLOW_H_
