#ifndef GAPLAB_MATCHING_HPP
#define GAPLAB_MATCHING_HPP

// Maximum matching (blossom contraction), minimum edge cover, factor
// criticality, vertex connectivity, simplicial vertices. All deterministic:
// roots and neighbors are scanned in increasing vertex order, so witnesses
// are reproducible across runs.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "gaplab/graph.hpp"

namespace gaplab {

struct MatchingResult {
  int size = 0;
  std::vector<int> mate;                    // mate[v] or -1 if exposed
  std::vector<std::pair<int, int>> edges;   // matched pairs, u < v, ordered
};

namespace detail {

// One BFS phase of the blossom algorithm: look for an augmenting path from
// root. Returns the exposed endpoint, or -1. p[] holds the alternating-tree
// parents used to rebuild the path.
inline int find_augmenting_path(const Graph& g, std::vector<int>& match,
                                std::vector<int>& p, int root) {
  const int n = g.order();
  std::vector<int> base(n);
  std::vector<char> used(n, 0), blossom(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  std::fill(p.begin(), p.end(), -1);
  used[root] = 1;

  std::vector<int> queue{root};

  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = p[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = p[match[b]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = 1;
      blossom[base[match[v]]] = 1;
      p[v] = child;
      child = match[v];
      v = p[match[v]];
    }
  };

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (std::uint64_t m = g.neighbors(v); m; m &= m - 1) {
      const int to = std::countr_zero(m);
      if (base[v] == base[to] || match[v] == to) continue;
      if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
        // Odd cycle: contract the blossom down to its base.
        const int cur_base = lca(v, to);
        std::fill(blossom.begin(), blossom.end(), 0);
        mark_path(v, cur_base, to);
        mark_path(to, cur_base, v);
        for (int i = 0; i < n; ++i)
          if (blossom[base[i]]) {
            base[i] = cur_base;
            if (!used[i]) {
              used[i] = 1;
              queue.push_back(i);
            }
          }
      } else if (p[to] == -1) {
        p[to] = v;
        if (match[to] == -1) return to;
        used[match[to]] = 1;
        queue.push_back(match[to]);
      }
    }
  }
  return -1;
}

}  // namespace detail

inline MatchingResult maximum_matching(const Graph& g) {
  const int n = g.order();
  std::vector<int> match(n, -1), p(n, -1);
  for (int root = 0; root < n; ++root) {
    if (match[root] != -1) continue;
    int v = detail::find_augmenting_path(g, match, p, root);
    while (v != -1) {
      const int pv = p[v];
      const int ppv = match[pv];
      match[v] = pv;
      match[pv] = v;
      v = ppv;
    }
  }
  MatchingResult out;
  out.mate = match;
  for (int v = 0; v < n; ++v)
    if (match[v] > v) {
      out.edges.emplace_back(v, match[v]);
      ++out.size;
    }
  return out;
}

inline int matching_number(const Graph& g) { return maximum_matching(g).size; }

// n - nu(G). Undefined (nullopt) when an isolated vertex exists, since no
// set of edges can cover it.
inline std::optional<int> edge_cover_number(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return std::nullopt;
  return g.order() - matching_number(g);
}

struct FactorCriticality {
  bool factor_critical = false;
  int witness = -1;  // vertex whose removal leaves no perfect matching
};

// G is factor-critical when G - v has a perfect matching for every v.
// The one-vertex graph qualifies (deleting its vertex leaves the empty
// graph, whose empty matching is perfect).
inline FactorCriticality is_factor_critical(const Graph& g) {
  const int n = g.order();
  if (n % 2 == 0) return {false, n == 0 ? -1 : 0};
  for (int v = 0; v < n; ++v) {
    Graph h = g.delete_vertex(v);
    if (matching_number(h) * 2 != n - 1) return {false, v};
  }
  return {true, -1};
}

struct Bicriticality {
  bool bicritical = false;
  int witness_u = -1, witness_v = -1;
};

// G - {u, v} has a perfect matching for every vertex pair.
inline Bicriticality is_bicritical(const Graph& g) {
  const int n = g.order();
  if (n % 2 != 0 || n == 0) return {false, -1, -1};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Graph h = g.induced(g.vertices() - VertexSet::single(u) - VertexSet::single(v));
      if (matching_number(h) * 2 != n - 2) return {false, u, v};
    }
  return {true, -1, -1};
}

namespace detail {

// Max number of internally vertex-disjoint s-t paths, via unit-capacity
// flow on the usual vertex-split digraph (v_in = 2v, v_out = 2v+1).
inline int disjoint_paths(const Graph& g, int s, int t) {
  const int n = g.order();
  const int nodes = 2 * n;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
  for (int u = 0; u < n; ++u)
    for (std::uint64_t m = g.neighbors(u); m; m &= m - 1) {
      const int v = std::countr_zero(m);
      cap[2 * u + 1][2 * v] = 1;
    }
  int flow = 0;
  for (;;) {
    std::vector<int> prev(nodes, -1);
    std::vector<int> queue{2 * s + 1};
    prev[2 * s + 1] = 2 * s + 1;
    for (std::size_t head = 0; head < queue.size() && prev[2 * t] == -1; ++head) {
      const int u = queue[head];
      for (int v = 0; v < nodes; ++v)
        if (prev[v] == -1 && cap[u][v] > 0) {
          prev[v] = u;
          queue.push_back(v);
        }
    }
    if (prev[2 * t] == -1) return flow;
    for (int v = 2 * t; v != 2 * s + 1; v = prev[v]) {
      cap[prev[v]][v] -= 1;
      cap[v][prev[v]] += 1;
    }
    ++flow;
  }
}

}  // namespace detail

// Menger: the connectivity is the minimum over non-adjacent pairs of the
// max number of disjoint paths; complete graphs are n-1 by convention.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!g.connected()) return 0;
  int best = n - 1;
  bool has_nonadjacent = false;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.adjacent(s, t)) {
        has_nonadjacent = true;
        best = std::min(best, detail::disjoint_paths(g, s, t));
      }
  return has_nonadjacent ? best : n - 1;
}

// Vertices whose neighborhood induces a clique.
inline VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    const std::uint64_t nb = g.neighbors(v);
    bool simplicial = true;
    for (std::uint64_t m = nb; m && simplicial; m &= m - 1) {
      const int u = std::countr_zero(m);
      if ((nb & ~g.closed_neighbors(u)) != 0) simplicial = false;
    }
    if (simplicial) out.add(v);
  }
  return out;
}

}  // namespace gaplab

#endif  // GAPLAB_MATCHING_HPP
