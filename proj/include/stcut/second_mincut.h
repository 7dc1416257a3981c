#ifndef STCUT_SECOND_MINCUT_H_
#define STCUT_SECOND_MINCUT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "stcut/graph.h"
#include "stcut/pq_dag.h"

namespace stcut {

enum class SecondCutSource { kNodeSubdivision, kNonTransversal };

struct SecondMincutResult {
  Cut cut;  // cut.capacity is the second minimum
  Capacity lambda = 0;
  SecondCutSource source = SecondCutSource::kNodeSubdivision;
  int node = -1;  // subdivided PqDag node
  int arc = -1;   // PqDag arc forced across for the non-transversal case
  int processed_nodes = 0;
  std::int64_t maxflow_calls = 0;
  std::int64_t global_mincut_calls = 0;
  std::int64_t candidate_maxflow_calls = 0;
};

// Strictly larger than the capacity of every cut of g.
Capacity infinity_proxy(const Graph& g);

// Least capacity over node-respecting cuts that are not minimum cuts: for
// every arc (a, b) with a != sink node and b != source node, the cheapest
// node set holding the source node and a but neither b nor the sink node.
struct NonTransversalCandidate {
  std::vector<int> nodes;
  Capacity value = 0;  // capacity above lambda
  int arc = -1;
  std::int64_t maxflow_calls = 0;
};
std::optional<NonTransversalCandidate> non_transversal_candidate(
    const PqDag& d);

// Both routines return the least-capacity (s,t)-cut whose capacity exceeds
// lambda and throw NoSecondMincut when every cut is minimum. Undirected
// inputs are handled through their bidirected form.
//
// Global mincut of each strong component, with terminal components pinned.
SecondMincutResult second_mincut(const Graph& g);
// Per-node contraction plus covering, one max flow per internal vertex.
SecondMincutResult second_mincut_covering(const Graph& g);

}  // namespace stcut

#endif  // STCUT_SECOND_MINCUT_H_
