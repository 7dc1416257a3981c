#ifndef STCUT_DOMINATOR_H_
#define STCUT_DOMINATOR_H_

#include <vector>

#include "stcut/flow.h"

namespace stcut {

// Every unit of a residual arc (u, v) becomes u -> m -> v with a fresh
// marked vertex m. Arcs of capacity two or more get two marked vertices,
// which is all domination can see. Original vertices keep their ids.
struct EdgeSplitGraph {
  int num_original = 0;
  std::vector<std::vector<int>> succ;
  std::vector<int> arc_of;  // residual arc of a marked vertex, else -1

  int num_vertices() const { return static_cast<int>(succ.size()); }
  bool is_marked(int v) const { return arc_of[v] >= 0; }
};

EdgeSplitGraph split_edges(const ResidualGraph& r);

struct DominatorTree {
  int root = 0;
  std::vector<int> idom;  // idom[root] == root, -1 when unreachable

  bool reachable(int v) const { return idom[v] >= 0; }
  bool dominates(int a, int b) const;
  std::vector<std::vector<int>> children() const;
};

// Iterative data-flow algorithm over reverse postorder.
DominatorTree dominator_tree(const std::vector<std::vector<int>>& succ,
                             int root);

struct DominatingArc {
  int arc = -1;
  VertexId tail = 0;
  VertexId head = 0;
  EdgeId origin = kArtificialArc;
};

// Residual arcs (w, u) of capacity one through which every path from root
// to u must pass: the marked vertex of the arc is the immediate dominator
// of u in the edge-split graph. Sorted by arc index.
std::vector<DominatingArc> dominating_arcs(const ResidualGraph& r,
                                           VertexId root);

}  // namespace stcut

#endif  // STCUT_DOMINATOR_H_
