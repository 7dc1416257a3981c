#ifndef STCUT_SENSITIVITY_H_
#define STCUT_SENSITIVITY_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "stcut/anchors.h"
#include "stcut/flow.h"
#include "stcut/graph.h"

namespace stcut {

enum class OracleKind { kBaseline, kCompact };

enum class QueryTrace {
  kBothIdle,
  kSingleReduction,
  kDoubleReduction,
  kNoAugment,
  kSingleAugment,
  kDoubleAugment,
  kMixed,
};
std::string_view trace_name(QueryTrace trace);

inline constexpr EdgeId kInsertedEdge = -1;

struct VertexPair {
  VertexId u = 0;
  VertexId v = 0;
};

struct CrossingEdge {
  EdgeId id = kInsertedEdge;
  VertexId u = 0;  // u < v
  VertexId v = 0;

  friend bool operator==(const CrossingEdge&, const CrossingEdge&) = default;
  friend auto operator<=>(const CrossingEdge&, const CrossingEdge&) = default;
};

struct QueryAnswer {
  Capacity capacity = 0;
  std::vector<VertexId> cut_side;
  std::vector<CrossingEdge> contributing;  // sorted by endpoints
  QueryTrace trace = QueryTrace::kBothIdle;
};

// Preprocessed state for dual edge failure and insertion queries on an
// undirected unit-capacity graph. Queries never modify it.
//
// The baseline keeps the whole residual graph. The compact form keeps one
// arc pair per edge joining two nodes of the anchor structure's DAG; every
// such edge carries flow or is an anchor.
struct OracleState {
  OracleKind kind = OracleKind::kBaseline;
  Graph graph;
  FlowAssignment flow;
  Capacity lambda = 0;
  std::vector<VertexId> mincut;
  std::optional<AnchorStructure> structure;

  ResidualGraph units{0};  // over vertices or DAG nodes
  std::vector<int> unit_of;  // vertex -> unit
  std::vector<int> pair_of_edge;  // edge index -> arc pair, -1 if absent
  int source_unit = 0;
  int sink_unit = 0;

  static OracleState baseline(const Graph& g);
  // Requires a simple graph.
  static OracleState compact(const Graph& g);

  int num_units() const { return units.num_vertices(); }
  int num_arc_pairs() const { return units.num_arcs() / 2; }
  std::uint64_t hash() const;
};

QueryAnswer query_fail_baseline(const OracleState& state, EdgeId e1,
                                EdgeId e2);
QueryAnswer query_fail_compact(const OracleState& state, EdgeId e1,
                               EdgeId e2);
QueryAnswer query_insert_baseline(const OracleState& state, VertexPair e1,
                                  VertexPair e2);
QueryAnswer query_insert_compact(const OracleState& state, VertexPair e1,
                                 VertexPair e2);
// One failure and one insertion; baseline state only.
QueryAnswer query_mixed_baseline(const OracleState& state, EdgeId failed,
                                 VertexPair inserted);

// Dispatch on state.kind.
QueryAnswer query_fail(const OracleState& state, EdgeId e1, EdgeId e2);
QueryAnswer query_insert(const OracleState& state, VertexPair e1,
                         VertexPair e2);

}  // namespace stcut

#endif  // STCUT_SENSITIVITY_H_
