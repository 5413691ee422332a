#ifndef GAPLAB_TESTS_SUPPORT_UTIL_HPP
#define GAPLAB_TESTS_SUPPORT_UTIL_HPP

#include <random>

#include "gaplab/graph.hpp"

namespace gaplab::testutil {

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

// Vertices 0..n-1, i ~ j iff |i - j| mod n is one of the listed distances.
inline Graph circulant(int n, std::initializer_list<int> dists) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int d : dists) g.add_edge(i, (i + d) % n);
  return g;
}

// Erdos-Renyi G(n, p) with a caller-owned generator, so suites stay seeded.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Applies perm to vertex labels: new graph has edge (perm[u], perm[v]) for
// every edge (u, v).
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace gaplab::testutil

#endif
