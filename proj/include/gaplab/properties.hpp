#ifndef GAPLAB_PROPERTIES_HPP
#define GAPLAB_PROPERTIES_HPP

// Randomized property suites: each suite draws seeded random graphs,
// checks one inequality or implication on every applicable draw, and
// reports the first counterexample if any. The RNG is used through local
// helpers only, so a given seed produces the same draws on every platform.

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gaplab/canonical.hpp"
#include "gaplab/constructions.hpp"
#include "gaplab/gap.hpp"
#include "gaplab/graph.hpp"
#include "gaplab/invariants.hpp"
#include "gaplab/matching.hpp"

namespace gaplab {

struct PropertyReport {
  std::string name;
  int trials = 0;
  int applicable = 0;  // draws where the hypothesis held
  int violations = 0;
  std::string counterexample;  // graph6 of the first violating graph
};

namespace detail {

inline int rnd_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline bool rnd_chance(std::mt19937_64& rng, int num, int den) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(den)) < num;
}

inline Graph rnd_graph(std::mt19937_64& rng, int n_lo, int n_hi) {
  const int n = rnd_int(rng, n_lo, n_hi);
  const int percent = rnd_int(rng, 10, 90);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rnd_chance(rng, percent, 100)) g.add_edge(u, v);
  return g;
}

inline Graph rnd_triangle_free(std::mt19937_64& rng, int n_lo, int n_hi) {
  const int n = rnd_int(rng, n_lo, n_hi);
  Graph g(n);
  const int tries = 3 * n;
  for (int i = 0; i < tries; ++i) {
    const int u = rnd_int(rng, 0, n - 1);
    const int v = rnd_int(rng, 0, n - 1);
    if (u == v || g.adjacent(u, v)) continue;
    if ((g.neighbors(u) & g.neighbors(v)) != 0) continue;  // would close a triangle
    g.add_edge(u, v);
  }
  return g;
}

inline VertexSet rnd_clique(std::mt19937_64& rng, const Graph& g) {
  VertexSet q;
  int v = rnd_int(rng, 0, g.order() - 1);
  q.add(v);
  std::uint64_t cands = g.neighbors(v);
  while (cands && rnd_chance(rng, 2, 3)) {
    std::uint64_t pick = cands;
    for (int skip = rnd_int(rng, 0, std::popcount(cands) - 1); skip > 0; --skip)
      pick &= pick - 1;
    const int u = std::countr_zero(pick);
    q.add(u);
    cands &= g.neighbors(u);
  }
  return q;
}

inline void flag(PropertyReport& rep, const Graph& g) {
  ++rep.violations;
  if (rep.counterexample.empty()) rep.counterexample = encode_graph6(g);
}

}  // namespace detail

// Removing a clique changes theta, alpha, and the gap by at most one; on a
// fully gap-critical graph the drop is exactly one for theta and the gap
// while alpha stays put.
inline PropertyReport property_clique_removal(int trials, std::mt19937_64& rng) {
  PropertyReport rep{"clique-removal inequalities"};
  std::vector<Graph> critical = {named_graph("C5"), named_graph("2C5"), named_graph("R13")};
  for (int i = 0; i < trials; ++i) {
    ++rep.trials;
    const Graph g = detail::rnd_graph(rng, 1, 12);
    const VertexSet q = detail::rnd_clique(rng, g);
    const Graph h = g.induced(VertexSet(g.vertices().bits & ~q.bits));
    const int th = clique_cover_number(g), th2 = clique_cover_number(h);
    const int al = stable_set_number(g), al2 = stable_set_number(h);
    ++rep.applicable;
    if (!(th >= th2 && th2 >= th - 1 && al >= al2 && al2 >= al - 1 &&
          th - al + 1 >= th2 - al2 && th2 - al2 >= th - al - 1))
      detail::flag(rep, g);
    if (g.order() <= 10 && is_gap_critical(g).full_critical && gap(g) >= 1)
      critical.push_back(g);
  }
  for (const Graph& g : critical) {
    if (!is_gap_critical(g, g.order()).full_critical) {
      detail::flag(rep, g);
      continue;
    }
    for (int i = 0; i < 20; ++i) {
      ++rep.trials;
      const VertexSet q = detail::rnd_clique(rng, g);
      if (q.size() == g.order()) continue;
      ++rep.applicable;
      const Graph h = g.induced(VertexSet(g.vertices().bits & ~q.bits));
      if (!(clique_cover_number(h) == clique_cover_number(g) - 1 &&
            stable_set_number(h) == stable_set_number(g) && gap(h) == gap(g) - 1))
        detail::flag(rep, g);
    }
  }
  return rep;
}

// Matching number plus edge-cover number equals the order on connected
// graphs of order at least two.
inline PropertyReport property_gallai_identity(int trials, std::mt19937_64& rng) {
  PropertyReport rep{"matching plus edge cover identity"};
  for (int i = 0; i < trials; ++i) {
    ++rep.trials;
    Graph g = detail::rnd_graph(rng, 2, 12);
    for (int retry = 0; retry < 40 && !g.connected(); ++retry)
      g = detail::rnd_graph(rng, 2, 12);
    if (!g.connected()) continue;
    ++rep.applicable;
    const auto zeta = edge_cover_number(g);
    if (!zeta || matching_number(g) + *zeta != g.order()) detail::flag(rep, g);
  }
  return rep;
}

inline PropertyReport property_component_additivity(int trials, std::mt19937_64& rng) {
  PropertyReport rep{"gap additivity over components"};
  for (int i = 0; i < trials; ++i) {
    ++rep.trials;
    ++rep.applicable;
    const int parts = detail::rnd_int(rng, 2, 3);
    Graph u(0);
    int total = 0;
    for (int k = 0; k < parts; ++k) {
      const Graph piece = detail::rnd_graph(rng, 1, 6);
      total += gap(piece);
      u = Graph::disjoint_union(u, piece);
    }
    if (gap(u) != total) detail::flag(rep, u);
  }
  return rep;
}

// Dualities between a graph and its complement, plus the basic chains.
inline PropertyReport property_complement_duality(int trials, std::mt19937_64& rng) {
  PropertyReport rep{"complement dualities"};
  for (int i = 0; i < trials; ++i) {
    ++rep.trials;
    ++rep.applicable;
    const Graph g = detail::rnd_graph(rng, 1, 12);
    const Graph co = g.complement();
    const int n = g.order();
    const int al = stable_set_number(g), om = clique_number(g);
    const int ch = chromatic_number(g), th = clique_cover_number(g);
    const bool dual = al == clique_number(co) && om == stable_set_number(co) &&
                      ch == clique_cover_number(co) && th == chromatic_number(co) &&
                      chromatic_gap(g) == gap(co);
    const bool chains = ch >= om && th >= al && om * th >= n && al * ch >= n;
    if (!dual || !chains) detail::flag(rep, g);
  }
  return rep;
}

// The greedy cover decomposition bounds the gap by (n - surplus - alpha(B))/2
// where B is the region covered by edges and singletons.
inline PropertyReport property_greedy_cover_bound(int trials, std::mt19937_64& rng) {
  PropertyReport rep{"greedy cover gap bound"};
  for (int i = 0; i < trials; ++i) {
    ++rep.trials;
    ++rep.applicable;
    const Graph g = detail::rnd_graph(rng, 1, 12);
    const GreedyCover gc = greedy_clique_cover(g);
    VertexSet b = gc.singletons;
    for (const VertexSet& e : gc.edges) b.bits |= e.bits;
    const int alpha_b = stable_set_number(g.induced(b));
    const int bound = (g.order() - gc.surplus - alpha_b) / 2;
    if (gc.gap_bound != bound || gap(g) > gc.gap_bound) detail::flag(rep, g);
  }
  return rep;
}

// One-sided screening: a graph without an induced triangular claw has the
// Helly property for its cliques.
inline PropertyReport property_claw_screening(int trials, std::mt19937_64& rng) {
  PropertyReport rep{"triangular claw screening"};
  for (int i = 0; i < trials; ++i) {
    ++rep.trials;
    const Graph g = detail::rnd_graph(rng, 1, 12);
    if (find_triangular_claw(g).found) continue;
    ++rep.applicable;
    if (!clique_helly_analysis(g).clique_helly) detail::flag(rep, g);
  }
  return rep;
}

// Graphs with stability at most 2 and some vertex whose neighborhood
// induces a perfect graph have gap at most 1.
inline PropertyReport property_alpha2_gap(int trials, std::mt19937_64& rng) {
  PropertyReport rep{"stability-2 gap bound"};
  for (int i = 0; i < trials; ++i) {
    ++rep.trials;
    // Complements of triangle-free graphs keep the hypothesis non-vacuous.
    const Graph g = (i % 2 == 0) ? detail::rnd_triangle_free(rng, 1, 12).complement()
                                 : detail::rnd_graph(rng, 1, 12);
    if (stable_set_number(g) > 2) continue;
    bool perfect_nbhd = false;
    for (int v = 0; v < g.order() && !perfect_nbhd; ++v)
      perfect_nbhd = is_perfect(g.induced(VertexSet(g.neighbors(v)))).perfect;
    if (!perfect_nbhd) continue;
    ++rep.applicable;
    if (gap(g) > 1) detail::flag(rep, g);
  }
  return rep;
}

namespace detail {

// Fully gap-critical graphs encountered across the sampled corpus, plus the
// known extremal ones; shared by the two structure suites below.
inline std::vector<Graph> critical_corpus(int trials, std::mt19937_64& rng) {
  std::vector<Graph> out;
  for (const char* name : {"C5", "C7", "C9", "2C5", "R13"}) {
    const Graph g = named_graph(name);
    if (is_gap_critical(g, g.order()).full_critical) out.push_back(g);
  }
  for (int i = 0; i < trials; ++i) {
    const Graph g = rnd_graph(rng, 1, 10);
    if (gap(g) >= 1 && is_gap_critical(g).full_critical) out.push_back(g);
  }
  return out;
}

}  // namespace detail

// Fully gap-critical graphs have no simplicial vertex, and the connected
// ones use at most ceil(n/2) cliques in a minimum cover.
inline std::pair<PropertyReport, PropertyReport> property_critical_structure(
    int trials, std::mt19937_64& rng) {
  PropertyReport simp{"no simplicial vertex in critical graphs"};
  PropertyReport cover{"cover size of connected critical graphs"};
  const std::vector<Graph> corpus = detail::critical_corpus(trials, rng);
  simp.trials = cover.trials = trials;
  for (const Graph& g : corpus) {
    ++simp.applicable;
    if (simplicial_vertices(g).size() != 0) detail::flag(simp, g);
    if (!g.connected()) continue;
    ++cover.applicable;
    if (clique_cover_number(g) > (g.order() + 1) / 2) detail::flag(cover, g);
  }
  return {simp, cover};
}

inline std::vector<PropertyReport> run_property_suites(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PropertyReport> out;
  out.push_back(property_clique_removal(trials, rng));
  out.push_back(property_gallai_identity(trials, rng));
  out.push_back(property_component_additivity(trials, rng));
  out.push_back(property_complement_duality(trials, rng));
  out.push_back(property_greedy_cover_bound(trials, rng));
  out.push_back(property_claw_screening(trials, rng));
  out.push_back(property_alpha2_gap(trials, rng));
  auto [simp, cover] = property_critical_structure(trials, rng);
  out.push_back(std::move(simp));
  out.push_back(std::move(cover));
  return out;
}

}  // namespace gaplab

#endif  // GAPLAB_PROPERTIES_HPP
