#ifndef STCUT_GRAPH_H_
#define STCUT_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

namespace stcut {

using VertexId = int;
using EdgeId = int;
using Capacity = std::int64_t;

inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  EdgeId id = kNoEdge;
  VertexId u = 0;
  VertexId v = 0;
  Capacity cap = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A capacitated multigraph with two distinguished terminals. Edges keep
// their ids through every transformation below, and ids are strictly
// increasing inside edges().
class Graph {
 public:
  Graph(int num_vertices, VertexId source, VertexId sink, bool directed,
        std::vector<Edge> edges = {});

  // Edges given as (u, v, cap) triples, numbered 0..m-1.
  static Graph from_triples(
      int num_vertices, VertexId source, VertexId sink, bool directed,
      const std::vector<std::tuple<VertexId, VertexId, Capacity>>& triples);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  VertexId source() const { return source_; }
  VertexId sink() const { return sink_; }
  bool directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Position of an edge id inside edges(), if present.
  std::optional<int> index_of(EdgeId id) const;
  const Edge& edge(EdgeId id) const;
  bool has_edge(EdgeId id) const { return index_of(id).has_value(); }
  // First edge joining u and v (either orientation when undirected).
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  Capacity total_capacity() const;
  EdgeId next_edge_id() const;
  bool valid_vertex(VertexId v) const {
    return v >= 0 && v < num_vertices_;
  }

  Graph with_terminals(VertexId source, VertexId sink) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int num_vertices_;
  VertexId source_;
  VertexId sink_;
  bool directed_;
  std::vector<Edge> edges_;
};

struct Cut {
  std::vector<VertexId> side;  // sorted
  Capacity capacity = 0;
  std::vector<EdgeId> edge_set;      // edges with exactly one end in side
  std::vector<EdgeId> contributing;  // edges counted in capacity
};

// Membership vector for a side; rejects unknown vertices.
std::vector<char> side_mask(int num_vertices, std::span<const VertexId> side);
std::vector<VertexId> mask_side(const std::vector<char>& mask);

// Capacity of the cut (side, V \ side). Requires a nonempty proper subset.
Cut cut_capacity(const Graph& g, std::span<const VertexId> side);
// Unchecked capacity on a membership mask.
Capacity mask_capacity(const Graph& g, const std::vector<char>& in_side);
bool is_st_cut(const Graph& g, std::span<const VertexId> side);

struct ContractionMap {
  std::vector<std::vector<VertexId>> groups;
};

struct Contraction {
  Graph graph;
  std::vector<VertexId> forward;  // original vertex -> quotient vertex

  // All original vertices whose image lies in local_side.
  std::vector<VertexId> expand(std::span<const VertexId> local_side) const;
};

// Quotient vertices are numbered by the smallest original member.
// Self-loops vanish, parallel edges survive with their original ids.
Contraction contract(const Graph& g, const ContractionMap& map);

Graph consolidate_parallel_edges(const Graph& g);
Graph add_edge(const Graph& g, VertexId u, VertexId v, Capacity cap);
Graph remove_edge(const Graph& g, EdgeId id);
// Reverses every arc; terminals stay where they are.
Graph transpose(const Graph& g);
// Each undirected edge becomes two opposite arcs (ids 2i and 2i+1).
Graph to_bidirected(const Graph& g);
// Each undirected edge of capacity q becomes q unit edges.
Graph unit_decompose(const Graph& g);
bool is_unit_capacity(const Graph& g);
bool is_simple(const Graph& g);

}  // namespace stcut

#endif  // STCUT_GRAPH_H_
