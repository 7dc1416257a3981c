#ifndef STCUT_MINPLUS1_H_
#define STCUT_MINPLUS1_H_

#include <optional>

#include "stcut/flow.h"
#include "stcut/graph.h"

namespace stcut {

// Converts a flow on an undirected graph to its bidirected form.
FlowAssignment bidirected_flow(const Graph& g, const FlowAssignment& f);

// Requires a maximum flow f whose residual graph leaves exactly one
// minimum cut, either V \ {t} or {s}. Returns a cut of capacity lambda + 1
// if one exists.
std::optional<Cut> minplus1_one_mincut(const Graph& g,
                                       const FlowAssignment& f);

// Any (s,t)-cut of capacity lambda + 1 for a maximum flow f.
std::optional<Cut> minplus1(const Graph& g, const FlowAssignment& f);
std::optional<Cut> minplus1(const Graph& g);

}  // namespace stcut

#endif  // STCUT_MINPLUS1_H_
