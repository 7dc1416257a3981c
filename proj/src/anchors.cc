#include "stcut/anchors.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "stcut/dominator.h"
#include "stcut/errors.h"
#include "stcut/second_mincut.h"

namespace stcut {
namespace {

void require_unit_undirected(const Graph& g) {
  if (g.directed() || !is_unit_capacity(g)) {
    fail(ErrorCode::kPreconditionViolated,
         "expects an undirected unit-capacity multigraph");
  }
}

int count_set(const std::vector<char>& mask) {
  return static_cast<int>(std::count(mask.begin(), mask.end(), 1));
}

// f read through the edge ids of a contraction of g.
FlowAssignment restrict_flow(const Graph& g, const FlowAssignment& f,
                             const Graph& h) {
  FlowAssignment out;
  for (const Edge& e : h.edges()) {
    auto index = g.index_of(e.id);
    Capacity x = index ? f.flow[*index] : 0;
    out.flow.push_back(x);
    if (e.u == h.source()) out.value += x;
    if (e.v == h.source()) out.value -= x;
  }
  return out;
}

}  // namespace

CutFlowProfile cut_flow_profile(const Graph& g, const FlowAssignment& f,
                                std::span<const VertexId> side) {
  std::vector<char> mask = side_mask(g.num_vertices(), side);
  CutFlowProfile profile;
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    if (mask[e.u] == mask[e.v]) continue;
    Capacity x = f.flow[i];
    if (x == 0) {
      profile.idle.push_back(e.id);
      continue;
    }
    // Orient the flow from the inside endpoint.
    if (!mask[e.u]) x = -x;
    if (x > 0) {
      profile.outward += static_cast<int>(x);
    } else {
      profile.inward += static_cast<int>(-x);
    }
  }
  return profile;
}

bool check_min_plus1_flow_characterization(const Graph& g,
                                           const FlowAssignment& f,
                                           std::span<const VertexId> side) {
  require_unit_undirected(g);
  CutFlowProfile p = cut_flow_profile(g, f, side);
  return p.idle.size() == 1 && p.inward == 0;
}

std::vector<EdgeId> compute_anchors(const Graph& g, const FlowAssignment& f) {
  require_unit_undirected(g);
  ResidualGraph r = residual(g, f);
  PqDag d = build_pq_dag(r, g.source(), g.sink(), false);
  const Capacity inf = infinity_proxy(g);
  std::set<EdgeId> anchors;
  auto collect = [&](const ResidualGraph& hr, VertexId root) {
    for (const DominatingArc& arc : dominating_arcs(hr, root)) {
      auto index = g.index_of(arc.origin);
      if (!index || f.flow[*index] != 0) {
        fail(ErrorCode::kInternal, "dominating arc is not an idle edge");
      }
      anchors.insert(arc.origin);
    }
  };
  for (int mu : d.topo) {
    if (d.nodes[mu].size() < 2) continue;
    Contraction c = build_g_mu_undirected(g, d, mu);
    const Graph& h = c.graph;
    FlowAssignment fh = restrict_flow(g, f, h);
    ResidualGraph hr = residual(h, fh);
    const bool source_alone = count_set(hr.reachable_from(h.source())) == 1;
    const bool sink_alone = count_set(hr.reaching(h.sink())) == 1;
    if (source_alone && sink_alone) {
      VertexId u = -1;
      for (VertexId x = 0; x < h.num_vertices() && u < 0; ++x) {
        if (x != h.source() && x != h.sink()) u = x;
      }
      FlowAssignment extended = fh;
      extended.flow.push_back(0);
      collect(residual(add_edge(h, h.source(), u, inf), extended), h.source());
      collect(residual(add_edge(h, u, h.sink(), inf), extended).transposed(),
              h.sink());
    } else if (sink_alone) {
      collect(hr, h.source());
    } else if (source_alone) {
      collect(hr.transposed(), h.sink());
    } else {
      fail(ErrorCode::kInternal, "contracted node has an unexpected cut");
    }
  }
  return {anchors.begin(), anchors.end()};
}

std::vector<EdgeId> zero_flow_forest(const Graph& g, const FlowAssignment& f) {
  std::vector<VertexId> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<EdgeId> forest;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (f.flow[i] != 0) continue;
    VertexId a = find(g.edges()[i].u);
    VertexId b = find(g.edges()[i].v);
    if (a == b) continue;
    parent[a] = b;
    forest.push_back(g.edges()[i].id);
  }
  return forest;
}

AnchorStructure build_structure(const Graph& g) {
  require_unit_undirected(g);
  return build_structure(g, cancel_flow_cycles(g, max_flow(g).flow));
}

AnchorStructure build_structure(const Graph& g, const FlowAssignment& f) {
  require_unit_undirected(g);
  validate_flow(g, f);
  AnchorStructure st{g, f, f.value, compute_anchors(g, f), {}};

  // Consolidate the anchor-free remainder, folding flows onto the first
  // edge of each parallel class.
  std::set<EdgeId> anchor_set(st.anchors.begin(), st.anchors.end());
  std::vector<Edge> kept;
  std::vector<Capacity> kept_flow;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (anchor_set.count(g.edges()[i].id)) continue;
    kept.push_back(g.edges()[i]);
    kept_flow.push_back(f.flow[i]);
  }
  Graph rest(g.num_vertices(), g.source(), g.sink(), false, kept);
  Graph merged = consolidate_parallel_edges(rest);
  std::map<std::pair<VertexId, VertexId>, int> slot;
  for (int i = 0; i < merged.num_edges(); ++i) {
    slot[std::minmax(merged.edges()[i].u, merged.edges()[i].v)] = i;
  }
  FlowAssignment merged_flow{std::vector<Capacity>(merged.num_edges(), 0),
                             f.value};
  for (size_t i = 0; i < kept.size(); ++i) {
    int target = slot[std::minmax(kept[i].u, kept[i].v)];
    bool same = merged.edges()[target].u == kept[i].u;
    merged_flow.flow[target] += same ? kept_flow[i] : -kept_flow[i];
  }
  st.dag = build_pq_dag(merged, merged_flow);
  return st;
}

CutClass classify_cut(const AnchorStructure& st,
                      std::span<const VertexId> side) {
  if (!is_st_cut(st.base, side)) {
    fail(ErrorCode::kPreconditionViolated, "side is not an (s,t)-cut");
  }
  bool transversal = is_one_transversal(st.dag, side);
  std::vector<char> mask = side_mask(st.base.num_vertices(), side);
  int crossing = 0;
  for (EdgeId id : st.anchors) {
    const Edge& e = st.base.edge(id);
    crossing += mask[e.u] != mask[e.v];
  }
  if (transversal && crossing == 0) return CutClass::kMincut;
  if (transversal && crossing == 1) return CutClass::kMinPlusOne;
  return CutClass::kOther;
}

void write_structure(std::ostream& out, const AnchorStructure& st) {
  const PqDag& d = st.dag;
  out << "structure " << st.base.num_vertices() << ' ' << st.base.num_edges()
      << " lambda " << st.lambda << '\n';
  for (int i = 0; i < st.base.num_edges(); ++i) {
    if (st.flow.flow[i] != 0) {
      out << "flow " << st.base.edges()[i].id + 1 << ' ' << st.flow.flow[i]
          << '\n';
    }
  }
  for (EdgeId id : st.anchors) {
    const Edge& e = st.base.edge(id);
    out << "anchor " << id + 1 << ' ' << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
  out << "nodes " << d.num_nodes() << " source " << d.source_node << " sink "
      << d.sink_node << '\n';
  for (int mu = 0; mu < d.num_nodes(); ++mu) {
    out << "node " << mu;
    for (VertexId v : d.nodes[mu]) out << ' ' << v + 1;
    out << '\n';
  }
  for (const DagArc& arc : d.arcs) {
    out << "arc " << arc.from << ' ' << arc.to << ' ' << arc.capacity;
    for (EdgeId id : arc.origins) out << ' ' << id + 1;
    out << '\n';
  }
  out << "topo";
  for (int mu : d.topo) out << ' ' << mu;
  out << "\nend\n";
}

AnchorStructure read_structure(std::istream& in, const Graph& base) {
  AnchorStructure st{base, zero_flow(base), 0, {}, {}};
  PqDag& d = st.dag;
  d.source = base.source();
  d.sink = base.sink();
  d.node_of.assign(base.num_vertices(), -1);
  auto bad = [](const std::string& why) {
    fail(ErrorCode::kParseError, "structure: " + why);
  };
  std::string line;
  bool ended = false;
  while (!ended && std::getline(in, line)) {
    std::istringstream words(line);
    std::string tag;
    if (!(words >> tag)) continue;
    if (tag == "structure") {
      int n = 0, m = 0;
      std::string word;
      words >> n >> m >> word >> st.lambda;
      if (n != base.num_vertices() || m != base.num_edges() ||
          word != "lambda") {
        bad("header does not match the graph");
      }
      st.flow.value = st.lambda;
    } else if (tag == "flow") {
      EdgeId id = 0;
      Capacity x = 0;
      words >> id >> x;
      auto index = base.index_of(id - 1);
      if (!index) bad("unknown edge in flow line");
      st.flow.flow[*index] = x;
    } else if (tag == "anchor") {
      EdgeId id = 0;
      words >> id;
      if (!base.has_edge(id - 1)) bad("unknown anchor edge");
      st.anchors.push_back(id - 1);
    } else if (tag == "nodes") {
      int count = 0;
      std::string w1, w2;
      words >> count >> w1 >> d.source_node >> w2 >> d.sink_node;
      d.nodes.assign(count, {});
    } else if (tag == "node") {
      int mu = 0;
      words >> mu;
      if (mu < 0 || mu >= d.num_nodes()) bad("node index out of range");
      VertexId v = 0;
      while (words >> v) {
        if (!base.valid_vertex(v - 1)) bad("vertex out of range");
        d.nodes[mu].push_back(v - 1);
        d.node_of[v - 1] = mu;
      }
    } else if (tag == "arc") {
      DagArc arc;
      words >> arc.from >> arc.to >> arc.capacity;
      EdgeId id = 0;
      while (words >> id) arc.origins.push_back(id - 1);
      d.arcs.push_back(arc);
    } else if (tag == "topo") {
      int mu = 0;
      while (words >> mu) d.topo.push_back(mu);
    } else if (tag == "end") {
      ended = true;
    } else {
      bad("unknown line '" + tag + "'");
    }
  }
  if (!ended) bad("missing end line");
  if (static_cast<int>(d.topo.size()) != d.num_nodes()) bad("topo size");
  d.topo_position.assign(d.num_nodes(), 0);
  for (int p = 0; p < d.num_nodes(); ++p) d.topo_position[d.topo[p]] = p;
  validate_flow(base, st.flow);
  return st;
}

}  // namespace stcut
