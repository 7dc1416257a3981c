#include "stcut/sensitivity.h"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

#include "stcut/errors.h"
#include "stcut/pq_dag.h"

namespace stcut {

std::string_view trace_name(QueryTrace trace) {
  switch (trace) {
    case QueryTrace::kBothIdle: return "both-idle";
    case QueryTrace::kSingleReduction: return "single-reduction";
    case QueryTrace::kDoubleReduction: return "double-reduction";
    case QueryTrace::kNoAugment: return "no-augment";
    case QueryTrace::kSingleAugment: return "single-augment";
    case QueryTrace::kDoubleAugment: return "double-augment";
    case QueryTrace::kMixed: return "mixed";
  }
  return "unknown";
}

namespace {

void require_unit_undirected(const Graph& g) {
  if (g.directed() || !is_unit_capacity(g)) {
    fail(ErrorCode::kPreconditionViolated,
         "oracle expects an undirected unit-capacity graph");
  }
}

std::vector<VertexId> canonical_mincut(const Graph& g,
                                       const FlowAssignment& f) {
  return mask_side(residual(g, f).reachable_from(g.source()));
}

OracleState make_state(OracleKind kind, const Graph& g,
                       const FlowAssignment& f) {
  return OracleState{kind, g, f, f.value, canonical_mincut(g, f),
                     std::nullopt, ResidualGraph(0), {}, {}, 0, 0};
}

// Mutable copy of the unit graph plus the inserted arcs.
struct Workspace {
  const OracleState& state;
  ResidualGraph arcs;
  std::vector<VertexPair> inserted;

  explicit Workspace(const OracleState& s) : state(s), arcs(s.units) {}

  int unit(VertexId v) const { return state.unit_of[v]; }

  // Drops a failed edge and restores a feasible flow on the rest. Returns
  // whether the flow value went down.
  bool fail_edge(int index) {
    const int pair = state.pair_of_edge[index];
    const Capacity x = state.flow.flow[index];
    if (pair < 0) return false;
    arcs.clear_pair(pair);
    if (x == 0) return false;
    const Edge& e = state.graph.edges()[index];
    VertexId tail = x > 0 ? e.u : e.v;
    VertexId head = x > 0 ? e.v : e.u;
    auto back = arcs.find_path(unit(tail), state.source_unit);
    if (!back) fail(ErrorCode::kNoCarrierPath, "no path back to the source");
    arcs.reverse_path(*back);
    auto front = arcs.find_path(state.sink_unit, unit(head));
    if (!front) fail(ErrorCode::kNoCarrierPath, "no path from the sink");
    arcs.reverse_path(*front);
    return true;
  }

  void insert_edge(VertexPair p) {
    arcs.add_arc_pair(unit(p.u), unit(p.v), 1, 1, kInsertedEdge);
    inserted.push_back(p);
  }

  bool augment() {
    auto path = arcs.find_path(state.source_unit, state.sink_unit);
    if (!path) return false;
    arcs.reverse_path(*path);
    return true;
  }
};

struct Condensed {
  std::vector<int> comp_of_unit;
  std::vector<int> position;  // topological position of each component
  int source_comp = 0;
  int sink_comp = 0;
};

Condensed condense(const Workspace& ws) {
  Condensation scc = strongly_connected_components(ws.arcs);
  Condensed c;
  c.comp_of_unit = scc.component;
  c.source_comp = scc.component[ws.state.source_unit];
  c.sink_comp = scc.component[ws.state.sink_unit];
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < ws.arcs.num_arcs(); ++a) {
    const ResidualArc& arc = ws.arcs.arc(a);
    int x = scc.component[arc.from];
    int y = scc.component[arc.to];
    if (arc.capacity > 0 && x != y) pairs.emplace_back(x, y);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<int> order = terminal_topological_order(
      scc.count, pairs, c.sink_comp, c.source_comp);
  c.position.assign(scc.count, 0);
  for (int p = 0; p < scc.count; ++p) c.position[order[p]] = p;
  return c;
}

std::vector<VertexId> side_where(const Workspace& ws,
                                 const auto& predicate) {
  std::vector<VertexId> side;
  for (VertexId v = 0; v < ws.state.graph.num_vertices(); ++v) {
    if (predicate(ws.unit(v))) side.push_back(v);
  }
  return side;
}

std::vector<VertexId> condensed_side(const Workspace& ws, const Condensed& c,
                                     const auto& keep_comp) {
  return side_where(ws, [&](int u) { return keep_comp(c.comp_of_unit[u]); });
}

// Edges of the current graph with one end in side. Edges internal to a unit
// never cross, so the unit graph's arc pairs list every candidate.
std::vector<CrossingEdge> crossing_edges(const Workspace& ws,
                                         const std::vector<VertexId>& side,
                                         std::vector<int> removed) {
  const Graph& g = ws.state.graph;
  std::vector<char> mask = side_mask(g.num_vertices(), side);
  std::vector<CrossingEdge> out;
  auto consider = [&](EdgeId id, VertexId u, VertexId v) {
    if (mask[u] != mask[v]) out.push_back({id, std::min(u, v), std::max(u, v)});
  };
  for (int i = 0; i < g.num_edges(); ++i) {
    if (ws.state.pair_of_edge[i] < 0) continue;
    if (std::find(removed.begin(), removed.end(), i) != removed.end()) continue;
    const Edge& e = g.edges()[i];
    consider(e.id, e.u, e.v);
  }
  for (const VertexPair& p : ws.inserted) consider(kInsertedEdge, p.u, p.v);
  std::sort(out.begin(), out.end(), [](const CrossingEdge& a,
                                       const CrossingEdge& b) {
    return std::tie(a.u, a.v, a.id) < std::tie(b.u, b.v, b.id);
  });
  return out;
}

int checked_edge(const OracleState& state, EdgeId id) {
  auto index = state.graph.index_of(id);
  if (!index) fail(ErrorCode::kUnknownEdge, "no edge " + std::to_string(id));
  return *index;
}

std::pair<int, int> checked_pair(const OracleState& state, EdgeId e1,
                                 EdgeId e2) {
  int a = checked_edge(state, e1);
  int b = checked_edge(state, e2);
  if (a == b) {
    fail(ErrorCode::kUnknownEdge,
         "edge " + std::to_string(e1) + " listed twice");
  }
  return {a, b};
}

void check_insertion(const OracleState& state, VertexPair p) {
  const Graph& g = state.graph;
  if (!g.valid_vertex(p.u) || !g.valid_vertex(p.v)) {
    fail(ErrorCode::kUnknownVertex, "inserted edge leaves the vertex range");
  }
  if (p.u == p.v) fail(ErrorCode::kInvalidGraph, "inserted self-loop");
}

void check_kind(const OracleState& state, OracleKind kind) {
  if (state.kind != kind) {
    fail(ErrorCode::kUnsupported, "query does not match the oracle variant");
  }
}

// e1 has been handled; e2 is judged on the condensed residual graph.
QueryAnswer finish_failure(Workspace& ws, int i1, int i2, bool reduced) {
  Capacity capacity = ws.state.lambda;
  if (reduced && !ws.augment()) --capacity;
  Condensed c = condense(ws);
  const Edge& e2 = ws.state.graph.edges()[i2];
  int a = c.comp_of_unit[ws.unit(e2.u)];
  int b = c.comp_of_unit[ws.unit(e2.v)];
  QueryAnswer answer;
  bool separated = ws.state.pair_of_edge[i2] >= 0 && a != b;
  if (separated) {
    int cut_at = std::max(c.position[a], c.position[b]);
    answer.cut_side = condensed_side(
        ws, c, [&](int comp) { return c.position[comp] >= cut_at; });
    --capacity;
  } else {
    answer.cut_side =
        condensed_side(ws, c, [&](int comp) { return comp == c.source_comp; });
  }
  answer.capacity = capacity;
  int events = (reduced ? 1 : 0) + (separated ? 1 : 0);
  answer.trace = events == 0   ? QueryTrace::kBothIdle
                 : events == 1 ? QueryTrace::kSingleReduction
                               : QueryTrace::kDoubleReduction;
  answer.contributing = crossing_edges(ws, answer.cut_side, {i1, i2});
  return answer;
}

QueryAnswer run_insertion(const OracleState& state, VertexPair e1,
                          VertexPair e2) {
  check_insertion(state, e1);
  check_insertion(state, e2);
  Workspace ws(state);
  ws.insert_edge(e1);
  int increases = ws.augment() ? 1 : 0;
  Condensed c = condense(ws);
  int a = c.comp_of_unit[ws.unit(e2.u)];
  int b = c.comp_of_unit[ws.unit(e2.v)];
  bool spans = std::minmax(a, b) == std::minmax(c.source_comp, c.sink_comp);
  bool touches_source = (a == c.source_comp) != (b == c.source_comp);
  QueryAnswer answer;
  if (spans || !touches_source) {
    answer.cut_side =
        condensed_side(ws, c, [&](int comp) { return comp == c.source_comp; });
  } else {
    answer.cut_side =
        condensed_side(ws, c, [&](int comp) { return comp != c.sink_comp; });
  }
  increases += spans ? 1 : 0;
  ws.insert_edge(e2);
  answer.capacity = state.lambda + increases;
  answer.trace = increases == 0   ? QueryTrace::kNoAugment
                 : increases == 1 ? QueryTrace::kSingleAugment
                                  : QueryTrace::kDoubleAugment;
  answer.contributing = crossing_edges(ws, answer.cut_side, {});
  return answer;
}

}  // namespace

OracleState OracleState::baseline(const Graph& g) {
  require_unit_undirected(g);
  FlowAssignment f = cancel_flow_cycles(g, max_flow(g).flow);
  OracleState st = make_state(OracleKind::kBaseline, g, f);
  st.units = residual(g, f);
  st.unit_of.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) st.unit_of[v] = v;
  for (int i = 0; i < g.num_edges(); ++i) st.pair_of_edge.push_back(2 * i);
  st.source_unit = g.source();
  st.sink_unit = g.sink();
  return st;
}

OracleState OracleState::compact(const Graph& g) {
  require_unit_undirected(g);
  if (!is_simple(g)) {
    fail(ErrorCode::kPreconditionViolated, "compact oracle needs a simple graph");
  }
  AnchorStructure structure = build_structure(g);
  OracleState st = make_state(OracleKind::kCompact, g, structure.flow);
  const PqDag& d = structure.dag;
  st.unit_of = d.node_of;
  st.units = ResidualGraph(d.num_nodes());
  st.pair_of_edge.assign(g.num_edges(), -1);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    int a = d.node_of[e.u];
    int b = d.node_of[e.v];
    if (a == b) continue;
    Capacity x = st.flow.flow[i];
    st.pair_of_edge[i] = st.units.add_arc_pair(a, b, 1 - x, 1 + x, e.id);
  }
  st.source_unit = d.source_node;
  st.sink_unit = d.sink_node;
  st.structure = std::move(structure);
  return st;
}

std::uint64_t OracleState::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::int64_t x) {
    for (int k = 0; k < 8; ++k) {
      h ^= static_cast<std::uint64_t>(x >> (8 * k)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<int>(kind));
  mix(lambda);
  for (Capacity x : flow.flow) mix(x);
  for (VertexId v : mincut) mix(v);
  for (int u : unit_of) mix(u);
  for (int p : pair_of_edge) mix(p);
  mix(source_unit);
  mix(sink_unit);
  for (int a = 0; a < units.num_arcs(); ++a) {
    const ResidualArc& arc = units.arc(a);
    mix(arc.from);
    mix(arc.to);
    mix(arc.capacity);
    mix(arc.origin);
  }
  if (structure) {
    for (EdgeId id : structure->anchors) mix(id);
    for (int mu : structure->dag.topo) mix(mu);
  }
  return h;
}

QueryAnswer query_fail_baseline(const OracleState& state, EdgeId e1,
                                EdgeId e2) {
  check_kind(state, OracleKind::kBaseline);
  auto [i1, i2] = checked_pair(state, e1, e2);
  Workspace ws(state);
  bool reduced = ws.fail_edge(i1);
  return finish_failure(ws, i1, i2, reduced);
}

QueryAnswer query_fail_compact(const OracleState& state, EdgeId e1,
                               EdgeId e2) {
  check_kind(state, OracleKind::kCompact);
  auto [i1, i2] = checked_pair(state, e1, e2);
  auto active = [&](int i) {
    return state.pair_of_edge[i] >= 0 && state.flow.flow[i] != 0;
  };
  if (!active(i1) && !active(i2)) {
    Workspace ws(state);
    QueryAnswer answer;
    answer.capacity = state.lambda;
    answer.cut_side = state.mincut;
    answer.trace = QueryTrace::kBothIdle;
    answer.contributing = crossing_edges(ws, answer.cut_side, {i1, i2});
    return answer;
  }
  if (!active(i1)) std::swap(i1, i2);
  Workspace ws(state);
  bool reduced = ws.fail_edge(i1);
  return finish_failure(ws, i1, i2, reduced);
}

QueryAnswer query_insert_baseline(const OracleState& state, VertexPair e1,
                                  VertexPair e2) {
  check_kind(state, OracleKind::kBaseline);
  return run_insertion(state, e1, e2);
}

QueryAnswer query_insert_compact(const OracleState& state, VertexPair e1,
                                 VertexPair e2) {
  check_kind(state, OracleKind::kCompact);
  return run_insertion(state, e1, e2);
}

QueryAnswer query_mixed_baseline(const OracleState& state, EdgeId failed,
                                 VertexPair inserted) {
  check_kind(state, OracleKind::kBaseline);
  int index = checked_edge(state, failed);
  check_insertion(state, inserted);
  Workspace ws(state);
  Capacity capacity = state.lambda;
  if (ws.fail_edge(index) && !ws.augment()) --capacity;
  ws.insert_edge(inserted);
  if (ws.augment()) ++capacity;
  QueryAnswer answer;
  answer.capacity = capacity;
  answer.cut_side =
      side_where(ws, [&, reach = ws.arcs.reachable_from(state.source_unit)](
                         int u) { return reach[u] != 0; });
  answer.trace = QueryTrace::kMixed;
  answer.contributing = crossing_edges(ws, answer.cut_side, {index});
  return answer;
}

QueryAnswer query_fail(const OracleState& state, EdgeId e1, EdgeId e2) {
  return state.kind == OracleKind::kCompact
             ? query_fail_compact(state, e1, e2)
             : query_fail_baseline(state, e1, e2);
}

QueryAnswer query_insert(const OracleState& state, VertexPair e1,
                         VertexPair e2) {
  return state.kind == OracleKind::kCompact
             ? query_insert_compact(state, e1, e2)
             : query_insert_baseline(state, e1, e2);
}

}  // namespace stcut
