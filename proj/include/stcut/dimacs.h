#ifndef STCUT_DIMACS_H_
#define STCUT_DIMACS_H_

#include <string>
#include <string_view>
#include <vector>

#include "stcut/graph.h"

namespace stcut {

// c <comment>
// p cut <n> <m> <directed|undirected>
// n <id> s | n <id> t
// a <u> <v> <cap>
// Ids are 1-based in the text and 0-based in the Graph; edge ids follow the
// order of the a-lines. Errors carry ParseError and the line number.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

enum class QueryOp { kFail, kInsert };

struct QueryLine {
  QueryOp op = QueryOp::kFail;
  VertexId u1 = 0, v1 = 0, u2 = 0, v2 = 0;  // 0-based
};

// fail u1 v1 u2 v2 | insert u1 v1 u2 v2, with c-comments and blank lines.
std::vector<QueryLine> parse_queries(std::string_view text);

}  // namespace stcut

#endif  // STCUT_DIMACS_H_
