#ifndef STCUT_GLOBAL_MINCUT_H_
#define STCUT_GLOBAL_MINCUT_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "stcut/graph.h"

namespace stcut {

struct GlobalCutResult {
  std::vector<VertexId> side;
  Capacity capacity = 0;
  std::int64_t maxflow_calls = 0;
  std::int64_t second_mincut_calls = 0;
};

// Minimum over all nonempty proper subsets. Fixes vertex 0 and runs a max
// flow in both directions against every other vertex. Terminals of g are
// ignored.
GlobalCutResult global_mincut(const Graph& g);

// A second (s,t)-mincut routine; throws NoSecondMincut when none exists.
using SecondMincutFn = std::function<Cut(const Graph&)>;

// Global mincut of a directed graph from one call to `second` on g plus an
// isolated source and sink.
GlobalCutResult global_mincut_via_second_mincut(const Graph& g,
                                                const SecondMincutFn& second);

}  // namespace stcut

#endif  // STCUT_GLOBAL_MINCUT_H_
