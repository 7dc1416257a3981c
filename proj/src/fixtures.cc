#include "stcut/fixtures.h"

namespace stcut::fixtures {

Graph t1() {
  return Graph::from_triples(3, 0, 2, true, {{0, 1, 2}, {1, 2, 1}, {0, 2, 1}});
}

Graph two() {
  return Graph::from_triples(
      4, 0, 3, true,
      {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}, {1, 2, 1}, {2, 1, 1}});
}

Graph p3(bool directed) {
  return Graph::from_triples(3, 0, 2, directed, {{0, 1, 1}, {1, 2, 1}});
}

Graph u1() {
  return Graph::from_triples(
      4, 0, 3, false,
      {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}, {1, 2, 1}});
}

Graph star(int k) {
  const VertexId t = k + 1;
  std::vector<std::tuple<VertexId, VertexId, Capacity>> triples;
  triples.emplace_back(0, t, 1);
  for (VertexId v = 1; v <= k; ++v) triples.emplace_back(v, t, 1);
  return Graph::from_triples(k + 2, 0, t, false, triples);
}

Graph dense_idle(int k) {
  const VertexId t = k + 1;
  const VertexId pendant = k + 2;
  std::vector<std::tuple<VertexId, VertexId, Capacity>> triples;
  for (VertexId v = 1; v <= k; ++v) triples.emplace_back(0, v, 1);
  for (VertexId a = 1; a <= k; ++a) {
    for (VertexId b = a + 1; b <= k; ++b) triples.emplace_back(a, b, 1);
  }
  triples.emplace_back(1, t, 1);
  triples.emplace_back(pendant, t, 1);
  return Graph::from_triples(k + 3, 0, t, false, triples);
}

}  // namespace stcut::fixtures
