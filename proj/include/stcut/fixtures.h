#ifndef STCUT_FIXTURES_H_
#define STCUT_FIXTURES_H_

#include "stcut/graph.h"

namespace stcut::fixtures {

// Vertex numbering used by every fixture: s = 0, t = last vertex.

// s=0 a=1 t=2; arcs (s,a,2) (a,t,1) (s,t,1).
Graph t1();
// s=0 u=1 v=2 t=3; unit arcs s->u s->v u->t v->t u->v v->u.
Graph two();
// s=0 a=1 t=2; unit path s-a-t.
Graph p3(bool directed = false);
// s=0 a=1 b=2 t=3; unit edges sa at sb bt ab.
Graph u1();
// s=0 v1..vk t=k+1; unit edges {s,t} and {vi,t}.
Graph star(int k);
// s=0 clique w=1..k t=k+1 pendant p=k+2: s adjacent to the clique,
// t adjacent to w=1 and to the pendant. Many idle edges, one anchor.
Graph dense_idle(int k);

}  // namespace stcut::fixtures

#endif  // STCUT_FIXTURES_H_
