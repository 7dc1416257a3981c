#include "stcut/flow.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string>
#include <utility>

#include "stcut/errors.h"

namespace stcut {

ResidualGraph::ResidualGraph(int num_vertices)
    : out_(num_vertices), in_(num_vertices) {}

int ResidualGraph::add_arc_pair(VertexId from, VertexId to, Capacity forward,
                                Capacity backward, EdgeId origin) {
  const int a = num_arcs();
  arcs_.push_back({from, to, forward, origin});
  arcs_.push_back({to, from, backward, origin});
  out_[from].push_back(a);
  in_[to].push_back(a);
  out_[to].push_back(a + 1);
  in_[from].push_back(a + 1);
  return a;
}

void ResidualGraph::push(int a, Capacity amount) {
  if (arcs_[a].capacity < amount) {
    fail(ErrorCode::kNotAPath, "arc " + std::to_string(a) +
                                   " lacks residual capacity");
  }
  arcs_[a].capacity -= amount;
  arcs_[twin(a)].capacity += amount;
}

void ResidualGraph::reverse_path(std::span<const int> path) {
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (arcs_[path[i]].to != arcs_[path[i + 1]].from) {
      fail(ErrorCode::kNotAPath, "consecutive arcs do not chain");
    }
  }
  for (int a : path) {
    if (a < 0 || a >= num_arcs() || arcs_[a].capacity < 1) {
      fail(ErrorCode::kNotAPath, "path uses an absent arc");
    }
  }
  for (int a : path) push(a, 1);
}

void ResidualGraph::clear_pair(int a) {
  arcs_[a].capacity = 0;
  arcs_[twin(a)].capacity = 0;
}

std::optional<std::vector<int>> ResidualGraph::find_path(VertexId from,
                                                         VertexId to) const {
  if (from == to) return std::vector<int>{};
  std::vector<int> via(num_vertices(), -1);
  std::vector<char> seen(num_vertices(), 0);
  std::deque<VertexId> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (int a : out_[v]) {
      const ResidualArc& arc = arcs_[a];
      if (arc.capacity <= 0 || seen[arc.to]) continue;
      seen[arc.to] = 1;
      via[arc.to] = a;
      if (arc.to == to) {
        std::vector<int> path;
        for (VertexId w = to; w != from; w = arcs_[via[w]].from) {
          path.push_back(via[w]);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(arc.to);
    }
  }
  return std::nullopt;
}

std::vector<char> ResidualGraph::reachable_from(VertexId v) const {
  std::vector<char> seen(num_vertices(), 0);
  std::vector<VertexId> stack{v};
  seen[v] = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (int a : out_[x]) {
      const ResidualArc& arc = arcs_[a];
      if (arc.capacity > 0 && !seen[arc.to]) {
        seen[arc.to] = 1;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

std::vector<char> ResidualGraph::reaching(VertexId v) const {
  std::vector<char> seen(num_vertices(), 0);
  std::vector<VertexId> stack{v};
  seen[v] = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (int a : in_[x]) {
      const ResidualArc& arc = arcs_[a];
      if (arc.capacity > 0 && !seen[arc.from]) {
        seen[arc.from] = 1;
        stack.push_back(arc.from);
      }
    }
  }
  return seen;
}

std::vector<ResidualArc> ResidualGraph::present_arcs() const {
  std::vector<ResidualArc> out;
  for (const ResidualArc& arc : arcs_) {
    if (arc.capacity > 0) out.push_back(arc);
  }
  return out;
}

Capacity ResidualGraph::out_capacity(const std::vector<char>& in_side) const {
  Capacity total = 0;
  for (const ResidualArc& arc : arcs_) {
    if (in_side[arc.from] && !in_side[arc.to]) total += arc.capacity;
  }
  return total;
}

ResidualGraph ResidualGraph::transposed() const {
  ResidualGraph t(num_vertices());
  for (int a = 0; a < num_arcs(); a += 2) {
    t.add_arc_pair(arcs_[a].to, arcs_[a].from, arcs_[a].capacity,
                   arcs_[a + 1].capacity, arcs_[a].origin);
  }
  return t;
}

FlowAssignment zero_flow(const Graph& g) {
  return FlowAssignment{std::vector<Capacity>(g.num_edges(), 0), 0};
}

void validate_flow(const Graph& g, const FlowAssignment& f) {
  if (static_cast<int>(f.flow.size()) != g.num_edges()) {
    fail(ErrorCode::kInfeasibleFlow, "flow size differs from edge count");
  }
  std::vector<Capacity> net(g.num_vertices(), 0);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    Capacity x = f.flow[i];
    bool ok = g.directed() ? (x >= 0 && x <= e.cap)
                           : (x >= -e.cap && x <= e.cap);
    if (!ok) {
      fail(ErrorCode::kInfeasibleFlow,
           "edge " + std::to_string(e.id) + " exceeds its capacity");
    }
    net[e.u] += x;
    net[e.v] -= x;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == g.source() || v == g.sink()) continue;
    if (net[v] != 0) {
      fail(ErrorCode::kInfeasibleFlow,
           "conservation fails at vertex " + std::to_string(v));
    }
  }
  if (net[g.source()] != f.value) {
    fail(ErrorCode::kInfeasibleFlow, "flow value mismatch");
  }
}

ResidualGraph residual(const Graph& g, const FlowAssignment& f) {
  validate_flow(g, f);
  ResidualGraph r(g.num_vertices());
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    Capacity x = f.flow[i];
    if (g.directed()) {
      r.add_arc_pair(e.u, e.v, e.cap - x, x, e.id);
    } else {
      r.add_arc_pair(e.u, e.v, e.cap - x, e.cap + x, e.id);
    }
  }
  return r;
}

FlowAssignment flow_from_residual(const Graph& g, const ResidualGraph& r) {
  FlowAssignment f;
  f.flow.resize(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    f.flow[i] = e.cap - r.arc(2 * i).capacity;
    if (e.u == g.source()) f.value += f.flow[i];
    if (e.v == g.source()) f.value -= f.flow[i];
  }
  return f;
}

Graph residual_as_graph(const ResidualGraph& r, VertexId source,
                        VertexId sink) {
  std::vector<Edge> edges;
  for (int a = 0; a < r.num_arcs(); ++a) {
    const ResidualArc& arc = r.arc(a);
    if (arc.capacity > 0) edges.push_back({a, arc.from, arc.to, arc.capacity});
  }
  return Graph(r.num_vertices(), source, sink, true, std::move(edges));
}

namespace {

MaxFlowResult run_max_flow(const Graph& g, VertexId from, VertexId to) {
  if (!g.valid_vertex(from) || !g.valid_vertex(to)) {
    fail(ErrorCode::kUnknownVertex, "terminal out of range");
  }
  if (from == to) fail(ErrorCode::kInvalidGraph, "terminals coincide");
  ResidualGraph r = residual(g.with_terminals(from, to), zero_flow(g));
  while (auto path = r.find_path(from, to)) {
    Capacity bottleneck = std::numeric_limits<Capacity>::max();
    for (int a : *path) bottleneck = std::min(bottleneck, r.arc(a).capacity);
    for (int a : *path) r.push(a, bottleneck);
  }
  MaxFlowResult result;
  result.flow = flow_from_residual(g.with_terminals(from, to), r);
  result.mincut = cut_capacity(g, mask_side(r.reachable_from(from)));
  return result;
}

}  // namespace

MaxFlowResult max_flow(const Graph& g) {
  return run_max_flow(g, g.source(), g.sink());
}

MaxFlowResult max_flow(const Graph& g, VertexId from, VertexId to) {
  return run_max_flow(g, from, to);
}

ResidualGraph update_path(const ResidualGraph& r, std::span<const int> path) {
  ResidualGraph copy = r;
  copy.reverse_path(path);
  return copy;
}

ResidualGraph update_path_vertices(const ResidualGraph& r,
                                   std::span<const VertexId> vertices) {
  std::vector<int> path;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= r.num_vertices()) {
      fail(ErrorCode::kUnknownVertex, "path vertex out of range");
    }
    int chosen = -1;
    for (int a : r.out_arcs(vertices[i])) {
      if (r.arc(a).to == vertices[i + 1] && r.arc(a).capacity > 0) {
        chosen = a;
        break;
      }
    }
    if (chosen < 0) fail(ErrorCode::kNotAPath, "missing arc on path");
    path.push_back(chosen);
  }
  return update_path(r, path);
}

FlowAssignment cancel_flow_cycles(const Graph& g, const FlowAssignment& f) {
  validate_flow(g, f);
  FlowAssignment out = f;
  const int n = g.num_vertices();
  auto tail = [&](int i) {
    return out.flow[i] > 0 ? g.edges()[i].u : g.edges()[i].v;
  };
  auto head = [&](int i) {
    return out.flow[i] > 0 ? g.edges()[i].v : g.edges()[i].u;
  };
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < g.num_edges(); ++i) {
    incident[g.edges()[i].u].push_back(i);
    incident[g.edges()[i].v].push_back(i);
  }
  while (true) {
    // Iterative DFS over flow-carrying arcs looking for a back arc.
    std::vector<int> color(n, 0);
    std::vector<int> depth_of(n, -1);
    std::vector<int> cycle;
    for (VertexId root = 0; root < n && cycle.empty(); ++root) {
      if (color[root] != 0) continue;
      std::vector<std::pair<VertexId, size_t>> stack{{root, 0}};
      std::vector<int> via;
      color[root] = 1;
      depth_of[root] = 0;
      while (!stack.empty() && cycle.empty()) {
        auto& [v, next] = stack.back();
        if (next == incident[v].size()) {
          color[v] = 2;
          stack.pop_back();
          if (!via.empty()) via.pop_back();
          continue;
        }
        int i = incident[v][next++];
        if (out.flow[i] == 0 || tail(i) != v) continue;
        VertexId w = head(i);
        if (color[w] == 1) {
          cycle.assign(via.begin() + depth_of[w], via.end());
          cycle.push_back(i);
        } else if (color[w] == 0) {
          color[w] = 1;
          depth_of[w] = static_cast<int>(stack.size());
          via.push_back(i);
          stack.emplace_back(w, 0);
        }
      }
    }
    if (cycle.empty()) break;
    Capacity amount = std::numeric_limits<Capacity>::max();
    for (int i : cycle) amount = std::min(amount, std::abs(out.flow[i]));
    for (int i : cycle) out.flow[i] += out.flow[i] > 0 ? -amount : amount;
  }
  return out;
}

ReducedFlow reduce_flow_through_edge(const Graph& g, const FlowAssignment& f,
                                     EdgeId e) {
  auto index = g.index_of(e);
  if (!index) fail(ErrorCode::kUnknownEdge, "no edge " + std::to_string(e));
  const int i = *index;
  if (f.flow.size() != g.edges().size() || std::abs(f.flow[i]) != 1) {
    fail(ErrorCode::kPreconditionViolated,
         "edge " + std::to_string(e) + " does not carry exactly one unit");
  }
  ResidualGraph r = residual(g, f);
  const Edge& edge = g.edges()[i];
  VertexId x = f.flow[i] > 0 ? edge.u : edge.v;
  VertexId y = f.flow[i] > 0 ? edge.v : edge.u;
  // Without e, x holds one surplus unit and y misses one; send the surplus
  // back to s and pull the missing unit from t.
  r.clear_pair(2 * i);
  auto back_to_source = r.find_path(x, g.source());
  if (!back_to_source) fail(ErrorCode::kNoCarrierPath, "no path to source");
  r.reverse_path(*back_to_source);
  auto from_sink = r.find_path(g.sink(), y);
  if (!from_sink) fail(ErrorCode::kNoCarrierPath, "no path from sink");
  r.reverse_path(*from_sink);

  FlowAssignment full = flow_from_residual(g, r);
  Graph reduced = remove_edge(g, e);
  FlowAssignment flow;
  flow.flow = full.flow;
  flow.flow.erase(flow.flow.begin() + i);
  flow.value = f.value - 1;
  ResidualGraph reduced_residual = residual(reduced, flow);
  return ReducedFlow{std::move(reduced), std::move(flow),
                     std::move(reduced_residual)};
}

}  // namespace stcut
