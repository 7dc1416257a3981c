#include "stcut/dimacs.h"

#include <optional>
#include <sstream>

#include "stcut/errors.h"

namespace stcut {
namespace {

[[noreturn]] void parse_fail(int line, const std::string& why) {
  fail(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + why);
}

template <typename T>
T read(std::istringstream& words, int line, const char* what) {
  T value{};
  if (!(words >> value)) parse_fail(line, std::string("expected ") + what);
  return value;
}

void expect_end(std::istringstream& words, int line) {
  std::string extra;
  if (words >> extra) parse_fail(line, "unexpected token '" + extra + "'");
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  std::optional<int> n;
  int declared_edges = 0;
  bool directed = true;
  std::optional<VertexId> source, sink;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream words(raw);
    std::string tag;
    if (!(words >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (n) parse_fail(line, "second problem line");
      if (read<std::string>(words, line, "'cut'") != "cut") {
        parse_fail(line, "problem type must be 'cut'");
      }
      n = read<int>(words, line, "vertex count");
      declared_edges = read<int>(words, line, "edge count");
      std::string kind = read<std::string>(words, line, "graph kind");
      if (kind != "directed" && kind != "undirected") {
        parse_fail(line, "graph kind must be directed or undirected");
      }
      directed = kind == "directed";
      expect_end(words, line);
      if (*n < 2) parse_fail(line, "need at least two vertices");
      continue;
    }
    if (!n) parse_fail(line, "line before the problem line");
    if (tag == "n") {
      int id = read<int>(words, line, "vertex id");
      std::string role = read<std::string>(words, line, "s or t");
      expect_end(words, line);
      if (id < 1 || id > *n) parse_fail(line, "vertex id out of range");
      if (role == "s") {
        if (source) parse_fail(line, "source given twice");
        source = id - 1;
      } else if (role == "t") {
        if (sink) parse_fail(line, "sink given twice");
        sink = id - 1;
      } else {
        parse_fail(line, "terminal role must be s or t");
      }
    } else if (tag == "a") {
      int u = read<int>(words, line, "tail");
      int v = read<int>(words, line, "head");
      long long cap = read<long long>(words, line, "capacity");
      expect_end(words, line);
      if (u < 1 || u > *n || v < 1 || v > *n) {
        parse_fail(line, "endpoint out of range");
      }
      if (u == v) parse_fail(line, "self-loop");
      if (cap < 1) parse_fail(line, "capacity must be at least 1");
      edges.push_back({static_cast<EdgeId>(edges.size()), u - 1, v - 1, cap});
    } else {
      parse_fail(line, "unknown line type '" + tag + "'");
    }
  }
  if (!n) parse_fail(line, "missing problem line");
  if (!source || !sink) parse_fail(line, "missing source or sink");
  if (*source == *sink) parse_fail(line, "source equals sink");
  if (declared_edges != static_cast<int>(edges.size())) {
    parse_fail(line, "edge count differs from the problem line");
  }
  return Graph(*n, *source, *sink, directed, std::move(edges));
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p cut " << g.num_vertices() << ' ' << g.num_edges() << ' '
      << (g.directed() ? "directed" : "undirected") << '\n';
  out << "n " << g.source() + 1 << " s\n";
  out << "n " << g.sink() + 1 << " t\n";
  for (const Edge& e : g.edges()) {
    out << "a " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.cap << '\n';
  }
  return out.str();
}

std::vector<QueryLine> parse_queries(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  std::vector<QueryLine> out;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream words(raw);
    std::string tag;
    if (!(words >> tag) || tag == "c") continue;
    QueryLine q;
    if (tag == "fail") {
      q.op = QueryOp::kFail;
    } else if (tag == "insert") {
      q.op = QueryOp::kInsert;
    } else {
      parse_fail(line, "unknown query '" + tag + "'");
    }
    q.u1 = read<int>(words, line, "vertex") - 1;
    q.v1 = read<int>(words, line, "vertex") - 1;
    q.u2 = read<int>(words, line, "vertex") - 1;
    q.v2 = read<int>(words, line, "vertex") - 1;
    expect_end(words, line);
    out.push_back(q);
  }
  return out;
}

}  // namespace stcut
