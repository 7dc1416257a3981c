#ifndef STCUT_ANCHORS_H_
#define STCUT_ANCHORS_H_

#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "stcut/cut_oracle.h"
#include "stcut/flow.h"
#include "stcut/graph.h"
#include "stcut/pq_dag.h"

namespace stcut {

// How the edges of a cut use the flow f (undirected, unit capacities).
struct CutFlowProfile {
  std::vector<EdgeId> idle;  // zero-flow edges with one end in side
  int outward = 0;           // unit flow leaving side
  int inward = 0;            // unit flow entering side
};
CutFlowProfile cut_flow_profile(const Graph& g, const FlowAssignment& f,
                                std::span<const VertexId> side);

// Exactly one idle edge crosses and every other crossing edge carries one
// unit out of side.
bool check_min_plus1_flow_characterization(const Graph& g,
                                           const FlowAssignment& f,
                                           std::span<const VertexId> side);

// Idle edges lying on some cut of capacity lambda + 1. Requires an
// undirected unit-capacity multigraph and a maximum flow. Sorted ids.
std::vector<EdgeId> compute_anchors(const Graph& g, const FlowAssignment& f);

// Spanning forest of the idle edges; always a superset of the anchors.
std::vector<EdgeId> zero_flow_forest(const Graph& g, const FlowAssignment& f);

struct AnchorStructure {
  Graph base;
  FlowAssignment flow;  // cycle-free maximum flow on base
  Capacity lambda = 0;
  std::vector<EdgeId> anchors;
  PqDag dag;  // built on base minus anchors, parallel edges consolidated
};

AnchorStructure build_structure(const Graph& g);
AnchorStructure build_structure(const Graph& g, const FlowAssignment& f);

CutClass classify_cut(const AnchorStructure& st,
                      std::span<const VertexId> side);

// Line-oriented text form, vertices and edges written 1-based.
void write_structure(std::ostream& out, const AnchorStructure& st);
AnchorStructure read_structure(std::istream& in, const Graph& base);

}  // namespace stcut

#endif  // STCUT_ANCHORS_H_
