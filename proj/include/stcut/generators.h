#ifndef STCUT_GENERATORS_H_
#define STCUT_GENERATORS_H_

#include <random>

#include "stcut/graph.h"

namespace stcut {

using Rng = std::mt19937_64;

// Every ordered pair u != v gets an arc with probability density and a
// capacity drawn from [1, max_cap]. s = 0, t = n - 1.
Graph random_directed(Rng& rng, int n, double density, Capacity max_cap);
// Every ordered pair gets, with probability density, between 1 and
// max_multiplicity parallel unit arcs.
Graph random_directed_multigraph(Rng& rng, int n, double density,
                                 int max_multiplicity);
// Unordered pairs, unit parallel edges, same scheme.
Graph random_undirected_multigraph(Rng& rng, int n, double density,
                                   int max_multiplicity);
Graph random_simple_undirected(Rng& rng, int n, double density);

}  // namespace stcut

#endif  // STCUT_GENERATORS_H_
