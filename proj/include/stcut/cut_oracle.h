#ifndef STCUT_CUT_ORACLE_H_
#define STCUT_CUT_ORACLE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stcut/flow.h"
#include "stcut/graph.h"

namespace stcut {

inline constexpr int kMaxEnumerationVertices = 24;

// Every cut of a small graph, indexed by a bitmask over free_vertices. For
// (s,t)-cuts the side is {s} plus the chosen free vertices; for global cuts
// every vertex is free and the empty and full masks are skipped.
struct CutInventory {
  int num_vertices = 0;
  bool global = false;
  VertexId source = 0;
  std::vector<VertexId> free_vertices;
  std::vector<Capacity> capacity;
  Capacity lambda = 0;
  std::optional<Capacity> second;
  std::vector<std::uint32_t> mincuts;
  std::vector<std::uint32_t> plus_one;

  std::uint32_t num_masks() const {
    return static_cast<std::uint32_t>(capacity.size());
  }
  bool valid_mask(std::uint32_t mask) const;
  std::vector<VertexId> side(std::uint32_t mask) const;
  std::uint32_t mask_of(std::span<const VertexId> side) const;
};

// Gray-code walk with incremental capacity updates.
CutInventory enumerate_cuts(const Graph& g, bool global = false);

// Zero-flow edges lying on at least one cut of capacity lambda + 1.
std::vector<EdgeId> brute_anchors(const Graph& g, const FlowAssignment& f);

enum class CutClass { kMincut, kMinPlusOne, kOther };

CutClass brute_classify(const CutInventory& inventory,
                        std::span<const VertexId> side);
CutClass brute_classify(const Graph& g, std::span<const VertexId> side);

}  // namespace stcut

#endif  // STCUT_CUT_ORACLE_H_
