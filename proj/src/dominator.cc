#include "stcut/dominator.h"

#include <utility>

namespace stcut {

EdgeSplitGraph split_edges(const ResidualGraph& r) {
  EdgeSplitGraph h;
  h.num_original = r.num_vertices();
  h.succ.assign(r.num_vertices(), {});
  h.arc_of.assign(r.num_vertices(), -1);
  for (int a = 0; a < r.num_arcs(); ++a) {
    const ResidualArc& arc = r.arc(a);
    int copies = arc.capacity >= 2 ? 2 : static_cast<int>(arc.capacity);
    for (int k = 0; k < copies; ++k) {
      int m = h.num_vertices();
      h.succ.push_back({arc.to});
      h.arc_of.push_back(a);
      h.succ[arc.from].push_back(m);
    }
  }
  return h;
}

bool DominatorTree::dominates(int a, int b) const {
  if (!reachable(a) || !reachable(b)) return false;
  for (int x = b;; x = idom[x]) {
    if (x == a) return true;
    if (x == root) return false;
  }
}

std::vector<std::vector<int>> DominatorTree::children() const {
  std::vector<std::vector<int>> out(idom.size());
  for (int v = 0; v < static_cast<int>(idom.size()); ++v) {
    if (v != root && idom[v] >= 0) out[idom[v]].push_back(v);
  }
  return out;
}

DominatorTree dominator_tree(const std::vector<std::vector<int>>& succ,
                             int root) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> postorder;
  std::vector<int> number(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<std::pair<int, size_t>> stack{{root, 0}};
  seen[root] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < succ[v].size()) {
      int w = succ[v][next++];
      if (!seen[w]) {
        seen[w] = 1;
        stack.emplace_back(w, 0);
      }
      continue;
    }
    number[v] = static_cast<int>(postorder.size());
    postorder.push_back(v);
    stack.pop_back();
  }
  std::vector<std::vector<int>> pred(n);
  for (int v = 0; v < n; ++v) {
    if (!seen[v]) continue;
    for (int w : succ[v]) pred[w].push_back(v);
  }

  DominatorTree tree;
  tree.root = root;
  tree.idom.assign(n, -1);
  tree.idom[root] = root;
  auto intersect = [&](int a, int b) {
    while (a != b) {
      while (number[a] < number[b]) a = tree.idom[a];
      while (number[b] < number[a]) b = tree.idom[b];
    }
    return a;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = postorder.rbegin(); it != postorder.rend(); ++it) {
      int v = *it;
      if (v == root) continue;
      int candidate = -1;
      for (int p : pred[v]) {
        if (tree.idom[p] < 0) continue;
        candidate = candidate < 0 ? p : intersect(p, candidate);
      }
      if (candidate != tree.idom[v]) {
        tree.idom[v] = candidate;
        changed = true;
      }
    }
  }
  return tree;
}

std::vector<DominatingArc> dominating_arcs(const ResidualGraph& r,
                                           VertexId root) {
  EdgeSplitGraph h = split_edges(r);
  DominatorTree tree = dominator_tree(h.succ, root);
  std::vector<DominatingArc> out;
  for (int m = h.num_original; m < h.num_vertices(); ++m) {
    const ResidualArc& arc = r.arc(h.arc_of[m]);
    if (arc.capacity != 1 || !tree.reachable(m)) continue;
    if (tree.idom[arc.to] == m) {
      out.push_back({h.arc_of[m], arc.from, arc.to, arc.origin});
    }
  }
  return out;
}

}  // namespace stcut
