#include "stcut/cut_oracle.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <string>

#include "stcut/errors.h"

namespace stcut {

bool CutInventory::valid_mask(std::uint32_t mask) const {
  if (mask >= num_masks()) return false;
  return !global || (mask != 0 && mask != num_masks() - 1);
}

std::vector<VertexId> CutInventory::side(std::uint32_t mask) const {
  std::vector<VertexId> out;
  if (!global) out.push_back(source);
  for (size_t i = 0; i < free_vertices.size(); ++i) {
    if (mask >> i & 1u) out.push_back(free_vertices[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t CutInventory::mask_of(std::span<const VertexId> side) const {
  std::uint32_t mask = 0;
  for (VertexId v : side) {
    auto it = std::find(free_vertices.begin(), free_vertices.end(), v);
    if (it != free_vertices.end()) {
      mask |= 1u << (it - free_vertices.begin());
    } else if (global || v != source) {
      fail(ErrorCode::kPreconditionViolated,
           "vertex " + std::to_string(v) + " cannot lie on this side");
    }
  }
  return mask;
}

CutInventory enumerate_cuts(const Graph& g, bool global) {
  const int n = g.num_vertices();
  if (n > kMaxEnumerationVertices) {
    fail(ErrorCode::kTooLarge, "enumeration is limited to 24 vertices");
  }
  CutInventory inv;
  inv.num_vertices = n;
  inv.global = global;
  inv.source = g.source();
  for (VertexId v = 0; v < n; ++v) {
    if (global || (v != g.source() && v != g.sink())) {
      inv.free_vertices.push_back(v);
    }
  }
  const int k = static_cast<int>(inv.free_vertices.size());
  const std::uint32_t total = 1u << k;
  inv.capacity.assign(total, 0);

  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < g.num_edges(); ++i) {
    incident[g.edges()[i].u].push_back(i);
    incident[g.edges()[i].v].push_back(i);
  }
  std::vector<char> in_side(n, 0);
  if (!global) in_side[g.source()] = 1;
  auto contribution = [&](const Edge& e) -> Capacity {
    if (in_side[e.u] && !in_side[e.v]) return e.cap;
    if (!g.directed() && !in_side[e.u] && in_side[e.v]) return e.cap;
    return 0;
  };
  Capacity current = mask_capacity(g, in_side);
  std::uint32_t gray = 0;
  inv.capacity[0] = current;
  for (std::uint32_t step = 1; step < total; ++step) {
    int bit = std::countr_zero(step);
    VertexId x = inv.free_vertices[bit];
    for (int i : incident[x]) current -= contribution(g.edges()[i]);
    in_side[x] ^= 1;
    for (int i : incident[x]) current += contribution(g.edges()[i]);
    gray ^= 1u << bit;
    inv.capacity[gray] = current;
  }

  Capacity best = std::numeric_limits<Capacity>::max();
  for (std::uint32_t m = 0; m < total; ++m) {
    if (inv.valid_mask(m)) best = std::min(best, inv.capacity[m]);
  }
  inv.lambda = best;
  for (std::uint32_t m = 0; m < total; ++m) {
    if (!inv.valid_mask(m)) continue;
    Capacity c = inv.capacity[m];
    if (c == best) {
      inv.mincuts.push_back(m);
    } else {
      if (!inv.second || c < *inv.second) inv.second = c;
      if (c == best + 1) inv.plus_one.push_back(m);
    }
  }
  return inv;
}

std::vector<EdgeId> brute_anchors(const Graph& g, const FlowAssignment& f) {
  CutInventory inv = enumerate_cuts(g);
  std::set<EdgeId> anchors;
  for (std::uint32_t mask : inv.plus_one) {
    std::vector<char> in_side = side_mask(g.num_vertices(), inv.side(mask));
    for (int i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edges()[i];
      if (f.flow[i] == 0 && in_side[e.u] != in_side[e.v]) anchors.insert(e.id);
    }
  }
  return {anchors.begin(), anchors.end()};
}

CutClass brute_classify(const CutInventory& inventory,
                        std::span<const VertexId> side) {
  Capacity c = inventory.capacity[inventory.mask_of(side)];
  if (c == inventory.lambda) return CutClass::kMincut;
  if (c == inventory.lambda + 1) return CutClass::kMinPlusOne;
  return CutClass::kOther;
}

CutClass brute_classify(const Graph& g, std::span<const VertexId> side) {
  if (!is_st_cut(g, side)) {
    fail(ErrorCode::kPreconditionViolated, "side is not an (s,t)-cut");
  }
  return brute_classify(enumerate_cuts(g), side);
}

}  // namespace stcut
