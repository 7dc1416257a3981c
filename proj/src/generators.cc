#include "stcut/generators.h"

namespace stcut {
namespace {

bool coin(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Graph build(int n, bool directed, std::vector<Edge> edges) {
  return Graph(n, 0, n - 1, directed, std::move(edges));
}

}  // namespace

Graph random_directed(Rng& rng, int n, double density, Capacity max_cap) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v || !coin(rng, density)) continue;
      edges.push_back({static_cast<EdgeId>(edges.size()), u, v,
                       uniform(rng, 1, static_cast<int>(max_cap))});
    }
  }
  return build(n, true, std::move(edges));
}

Graph random_directed_multigraph(Rng& rng, int n, double density,
                                 int max_multiplicity) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v || !coin(rng, density)) continue;
      int copies = uniform(rng, 1, max_multiplicity);
      for (int k = 0; k < copies; ++k) {
        edges.push_back({static_cast<EdgeId>(edges.size()), u, v, 1});
      }
    }
  }
  return build(n, true, std::move(edges));
}

Graph random_undirected_multigraph(Rng& rng, int n, double density,
                                   int max_multiplicity) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!coin(rng, density)) continue;
      int copies = uniform(rng, 1, max_multiplicity);
      for (int k = 0; k < copies; ++k) {
        edges.push_back({static_cast<EdgeId>(edges.size()), u, v, 1});
      }
    }
  }
  return build(n, false, std::move(edges));
}

Graph random_simple_undirected(Rng& rng, int n, double density) {
  return random_undirected_multigraph(rng, n, density, 1);
}

}  // namespace stcut
