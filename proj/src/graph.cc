#include "stcut/graph.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "stcut/errors.h"

namespace stcut {

Graph::Graph(int num_vertices, VertexId source, VertexId sink, bool directed,
             std::vector<Edge> edges)
    : num_vertices_(num_vertices),
      source_(source),
      sink_(sink),
      directed_(directed),
      edges_(std::move(edges)) {
  if (num_vertices_ < 2) {
    fail(ErrorCode::kInvalidGraph, "a graph needs at least two vertices");
  }
  if (!valid_vertex(source_) || !valid_vertex(sink_)) {
    fail(ErrorCode::kUnknownVertex, "terminal out of range");
  }
  if (source_ == sink_) {
    fail(ErrorCode::kInvalidGraph, "source and sink coincide");
  }
  EdgeId previous = -1;
  for (const Edge& e : edges_) {
    if (e.id <= previous) {
      fail(ErrorCode::kInvalidGraph, "edge ids must be strictly increasing");
    }
    previous = e.id;
    if (!valid_vertex(e.u) || !valid_vertex(e.v)) {
      fail(ErrorCode::kUnknownVertex,
           "edge " + std::to_string(e.id) + " has an endpoint out of range");
    }
    if (e.u == e.v) {
      fail(ErrorCode::kInvalidGraph,
           "edge " + std::to_string(e.id) + " is a self-loop");
    }
    if (e.cap < 1) {
      fail(ErrorCode::kInvalidGraph,
           "edge " + std::to_string(e.id) + " has capacity below 1");
    }
  }
}

Graph Graph::from_triples(
    int num_vertices, VertexId source, VertexId sink, bool directed,
    const std::vector<std::tuple<VertexId, VertexId, Capacity>>& triples) {
  std::vector<Edge> edges;
  edges.reserve(triples.size());
  for (const auto& [u, v, cap] : triples) {
    edges.push_back({static_cast<EdgeId>(edges.size()), u, v, cap});
  }
  return Graph(num_vertices, source, sink, directed, std::move(edges));
}

std::optional<int> Graph::index_of(EdgeId id) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, EdgeId key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

const Edge& Graph::edge(EdgeId id) const {
  auto index = index_of(id);
  if (!index) fail(ErrorCode::kUnknownEdge, "no edge " + std::to_string(id));
  return edges_[*index];
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  for (const Edge& e : edges_) {
    if ((e.u == u && e.v == v) || (!directed_ && e.u == v && e.v == u)) {
      return e.id;
    }
  }
  return std::nullopt;
}

Capacity Graph::total_capacity() const {
  Capacity total = 0;
  for (const Edge& e : edges_) total += e.cap;
  return total;
}

EdgeId Graph::next_edge_id() const {
  return edges_.empty() ? 0 : edges_.back().id + 1;
}

Graph Graph::with_terminals(VertexId source, VertexId sink) const {
  return Graph(num_vertices_, source, sink, directed_, edges_);
}

std::vector<char> side_mask(int num_vertices,
                            std::span<const VertexId> side) {
  std::vector<char> mask(num_vertices, 0);
  for (VertexId v : side) {
    if (v < 0 || v >= num_vertices) {
      fail(ErrorCode::kUnknownVertex, "vertex " + std::to_string(v));
    }
    mask[v] = 1;
  }
  return mask;
}

std::vector<VertexId> mask_side(const std::vector<char>& mask) {
  std::vector<VertexId> side;
  for (VertexId v = 0; v < static_cast<VertexId>(mask.size()); ++v) {
    if (mask[v]) side.push_back(v);
  }
  return side;
}

Capacity mask_capacity(const Graph& g, const std::vector<char>& in_side) {
  Capacity total = 0;
  for (const Edge& e : g.edges()) {
    if (in_side[e.u] && !in_side[e.v]) {
      total += e.cap;
    } else if (!g.directed() && !in_side[e.u] && in_side[e.v]) {
      total += e.cap;
    }
  }
  return total;
}

Cut cut_capacity(const Graph& g, std::span<const VertexId> side) {
  std::vector<char> mask = side_mask(g.num_vertices(), side);
  Cut cut;
  cut.side = mask_side(mask);
  if (cut.side.empty()) fail(ErrorCode::kEmptySide, "cut side is empty");
  if (static_cast<int>(cut.side.size()) == g.num_vertices()) {
    fail(ErrorCode::kFullSide, "cut side is the whole vertex set");
  }
  for (const Edge& e : g.edges()) {
    if (mask[e.u] == mask[e.v]) continue;
    cut.edge_set.push_back(e.id);
    if (!g.directed() || mask[e.u]) {
      cut.contributing.push_back(e.id);
      cut.capacity += e.cap;
    }
  }
  return cut;
}

bool is_st_cut(const Graph& g, std::span<const VertexId> side) {
  bool has_source = false;
  bool has_sink = false;
  for (VertexId v : side) {
    has_source |= v == g.source();
    has_sink |= v == g.sink();
  }
  return has_source && !has_sink;
}

std::vector<VertexId> Contraction::expand(
    std::span<const VertexId> local_side) const {
  std::vector<char> wanted(graph.num_vertices(), 0);
  for (VertexId v : local_side) wanted[v] = 1;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(forward.size()); ++v) {
    if (wanted[forward[v]]) out.push_back(v);
  }
  return out;
}

Contraction contract(const Graph& g, const ContractionMap& map) {
  const int n = g.num_vertices();
  // Representative of each vertex is the smallest member of its group.
  std::vector<VertexId> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  std::vector<char> seen(n, 0);
  for (const auto& group : map.groups) {
    if (group.empty()) continue;
    VertexId smallest = *std::min_element(group.begin(), group.end());
    for (VertexId v : group) {
      if (!g.valid_vertex(v)) {
        fail(ErrorCode::kUnknownVertex, "vertex " + std::to_string(v));
      }
      if (seen[v]) {
        fail(ErrorCode::kInvalidGraph,
             "vertex " + std::to_string(v) + " appears in two groups");
      }
      seen[v] = 1;
      rep[v] = smallest;
    }
  }
  if (rep[g.source()] == rep[g.sink()]) {
    fail(ErrorCode::kSourceSinkMerged, "source and sink share a group");
  }
  std::vector<VertexId> id_of_rep(n, -1);
  int next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (rep[v] == v) id_of_rep[v] = next++;
  }
  std::vector<VertexId> forward(n);
  for (VertexId v = 0; v < n; ++v) forward[v] = id_of_rep[rep[v]];
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    VertexId a = forward[e.u];
    VertexId b = forward[e.v];
    if (a == b) continue;
    edges.push_back({e.id, a, b, e.cap});
  }
  Graph quotient(next, forward[g.source()], forward[g.sink()], g.directed(),
                 std::move(edges));
  return Contraction{std::move(quotient), std::move(forward)};
}

Graph consolidate_parallel_edges(const Graph& g) {
  if (g.directed()) {
    fail(ErrorCode::kUnsupported, "consolidation expects an undirected graph");
  }
  std::map<std::pair<VertexId, VertexId>, int> slot;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = slot.emplace(key, static_cast<int>(edges.size()));
    if (inserted) {
      edges.push_back(e);
    } else {
      edges[it->second].cap += e.cap;
    }
  }
  return Graph(g.num_vertices(), g.source(), g.sink(), false,
               std::move(edges));
}

Graph add_edge(const Graph& g, VertexId u, VertexId v, Capacity cap) {
  std::vector<Edge> edges = g.edges();
  edges.push_back({g.next_edge_id(), u, v, cap});
  return Graph(g.num_vertices(), g.source(), g.sink(), g.directed(),
               std::move(edges));
}

Graph remove_edge(const Graph& g, EdgeId id) {
  auto index = g.index_of(id);
  if (!index) fail(ErrorCode::kUnknownEdge, "no edge " + std::to_string(id));
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + *index);
  return Graph(g.num_vertices(), g.source(), g.sink(), g.directed(),
               std::move(edges));
}

Graph transpose(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) std::swap(e.u, e.v);
  return Graph(g.num_vertices(), g.source(), g.sink(), g.directed(),
               std::move(edges));
}

Graph to_bidirected(const Graph& g) {
  if (g.directed()) return g;
  std::vector<Edge> edges;
  edges.reserve(2 * g.edges().size());
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    edges.push_back({2 * i, e.u, e.v, e.cap});
    edges.push_back({2 * i + 1, e.v, e.u, e.cap});
  }
  return Graph(g.num_vertices(), g.source(), g.sink(), true,
               std::move(edges));
}

Graph unit_decompose(const Graph& g) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    for (Capacity k = 0; k < e.cap; ++k) {
      edges.push_back({static_cast<EdgeId>(edges.size()), e.u, e.v, 1});
    }
  }
  return Graph(g.num_vertices(), g.source(), g.sink(), g.directed(),
               std::move(edges));
}

bool is_unit_capacity(const Graph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.cap == 1; });
}

bool is_simple(const Graph& g) {
  std::map<std::pair<VertexId, VertexId>, int> count;
  for (const Edge& e : g.edges()) {
    std::pair<VertexId, VertexId> key =
        g.directed() ? std::make_pair(e.u, e.v) : std::pair<VertexId, VertexId>(std::minmax(e.u, e.v));
    if (++count[key] > 1) return false;
  }
  return true;
}

}  // namespace stcut
