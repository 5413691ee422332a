#ifndef GAPLAB_INVARIANTS_HPP
#define GAPLAB_INVARIANTS_HPP

// Exact solvers for the stable set number, clique number, chromatic number
// and clique cover number, plus perfection testing and the greedy clique
// cover bound. Witnesses are deterministic: among all optimal solutions the
// lexicographically least one (as a sorted vertex list) is returned.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gaplab/graph.hpp"
#include "gaplab/matching.hpp"

namespace gaplab {

namespace detail {

// Branch and bound for a maximum stable set inside cand. Pivot on the
// highest-degree candidate; vertices with no candidate neighbor are always
// taken. The popcount bound is weak but cheap, which wins at these sizes.
struct MisSolver {
  const Graph& g;
  int best = 0;

  void run(std::uint64_t cand, int cur) {
    for (;;) {
      if (cur + std::popcount(cand) <= best) return;
      if (cand == 0) {
        best = cur;
        return;
      }
      int pivot = -1, pivot_deg = -1;
      bool settled = true;
      for (std::uint64_t m = cand; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const int d = std::popcount(g.neighbors(v) & cand);
        if (d > pivot_deg) {
          pivot = v;
          pivot_deg = d;
        }
        if (d > 1) settled = false;
      }
      if (pivot_deg == 0) {
        // All candidates are isolated within cand: take them all.
        cur += std::popcount(cand);
        if (cur > best) best = cur;
        return;
      }
      if (settled) {
        // Max degree 1: disjoint edges plus isolated vertices, one pick per
        // component.
        int edges = 0;
        for (std::uint64_t m = cand; m; m &= m - 1) {
          const int v = std::countr_zero(m);
          edges += std::popcount(g.neighbors(v) & cand);
        }
        cur += std::popcount(cand) - edges / 2;
        if (cur > best) best = cur;
        return;
      }
      run(cand & ~g.closed_neighbors(pivot), cur + 1);
      cand &= ~(1ULL << pivot);  // pivot excluded; loop continues
    }
  }
};

// Same scheme for cliques, branching on common neighborhoods.
struct CliqueSolver {
  const Graph& g;
  int best = 0;

  void run(std::uint64_t cand, int cur) {
    for (;;) {
      const int cnt = std::popcount(cand);
      if (cur + cnt <= best) return;
      if (cand == 0) {
        best = cur;
        return;
      }
      int pivot = -1, pivot_deg = -1, min_deg = cnt;
      for (std::uint64_t m = cand; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const int d = std::popcount(g.neighbors(v) & cand);
        if (d > pivot_deg) {
          pivot = v;
          pivot_deg = d;
        }
        if (d < min_deg) min_deg = d;
      }
      if (min_deg == cnt - 1) {
        // cand is a clique.
        best = cur + cnt;
        return;
      }
      run(cand & g.neighbors(pivot), cur + 1);
      cand &= ~(1ULL << pivot);
    }
  }
};

}  // namespace detail

inline int stable_set_number(const Graph& g, VertexSet within) {
  detail::MisSolver s{g};
  std::uint64_t rest = (within & g.vertices()).bits;
  int total = 0;
  // Components are independent; solving them separately keeps trees small.
  while (rest) {
    std::uint64_t comp = 1ULL << std::countr_zero(rest);
    for (;;) {
      std::uint64_t grown = comp;
      for (std::uint64_t m = comp; m; m &= m - 1)
        grown |= g.neighbors(std::countr_zero(m)) & rest;
      if (grown == comp) break;
      comp = grown;
    }
    s.best = 0;
    s.run(comp, 0);
    total += s.best;
    rest &= ~comp;
  }
  return total;
}

inline int stable_set_number(const Graph& g) {
  return stable_set_number(g, g.vertices());
}

inline int clique_number(const Graph& g, VertexSet within) {
  detail::CliqueSolver s{g};
  s.run((within & g.vertices()).bits, 0);
  return s.best;
}

inline int clique_number(const Graph& g) { return clique_number(g, g.vertices()); }

// Lexicographically least maximum stable set: commit each vertex in index
// order whenever doing so still permits an optimal completion.
inline VertexSet max_stable_set(const Graph& g, VertexSet within) {
  const int target = stable_set_number(g, within);
  VertexSet chosen;
  std::uint64_t cand = (within & g.vertices()).bits;
  int have = 0;
  while (have < target) {
    if (cand == 0) throw std::logic_error("stable set witness search lost the optimum");
    const int v = std::countr_zero(cand);
    const std::uint64_t rest = cand & ~g.closed_neighbors(v);
    if (have + 1 + stable_set_number(g, VertexSet(rest)) == target) {
      chosen.add(v);
      ++have;
      cand = rest;
    } else {
      cand &= ~(1ULL << v);
    }
  }
  return chosen;
}

inline VertexSet max_stable_set(const Graph& g) { return max_stable_set(g, g.vertices()); }

inline VertexSet max_clique(const Graph& g, VertexSet within) {
  const int target = clique_number(g, within);
  VertexSet chosen;
  std::uint64_t cand = (within & g.vertices()).bits;
  int have = 0;
  while (have < target) {
    if (cand == 0) throw std::logic_error("clique witness search lost the optimum");
    const int v = std::countr_zero(cand);
    const std::uint64_t rest = cand & g.neighbors(v);
    if (have + 1 + clique_number(g, VertexSet(rest)) == target) {
      chosen.add(v);
      ++have;
      cand = rest;
    } else {
      cand &= ~(1ULL << v);
    }
  }
  return chosen;
}

inline VertexSet max_clique(const Graph& g) { return max_clique(g, g.vertices()); }

struct Triangle {
  bool found = false;
  int a = -1, b = -1, c = -1;
};

inline Triangle find_triangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (std::uint64_t m = g.neighbors(u) & ~((2ULL << u) - 1); m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const std::uint64_t common = g.neighbors(u) & g.neighbors(v);
      if (common) return {true, u, v, std::countr_zero(common)};
    }
  return {};
}

inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).found; }

namespace detail {

// DSATUR-style branch and bound. colors uses values 0..k-1; a vertex may
// open color k (one new color) only. Seeding a maximum clique fixes the
// lower bound and breaks the color-class symmetry.
struct ColorSolver {
  const Graph& g;
  int best;                       // best complete coloring found so far
  std::vector<int> best_colors;
  std::vector<int> colors;

  bool lower_hit = false;
  int lower = 0;

  void run(int colored, int k) {
    if (lower_hit) return;
    if (k >= best) return;
    if (colored == g.order()) {
      best = k;
      best_colors = colors;
      if (best == lower) lower_hit = true;
      return;
    }
    // Most saturated uncolored vertex; ties by degree, then index.
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (colors[v] != -1) continue;
      std::uint64_t seen = 0;
      for (std::uint64_t m = g.neighbors(v); m; m &= m - 1) {
        const int u = std::countr_zero(m);
        if (colors[u] != -1) seen |= 1ULL << colors[u];
      }
      const int sat = std::popcount(seen);
      const int deg = g.degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    std::uint64_t taken = 0;
    for (std::uint64_t m = g.neighbors(pick); m; m &= m - 1) {
      const int u = std::countr_zero(m);
      if (colors[u] != -1) taken |= 1ULL << colors[u];
    }
    const int top = std::min(k + 1, best - 1);
    for (int c = 0; c < top; ++c) {
      if ((taken >> c) & 1) continue;
      colors[pick] = c;
      run(colored + 1, std::max(k, c + 1));
      colors[pick] = -1;
      if (lower_hit) return;
    }
  }
};

}  // namespace detail

inline int chromatic_number(const Graph& g, std::vector<int>* witness = nullptr) {
  const int n = g.order();
  if (n == 0) {
    if (witness) witness->clear();
    return 0;
  }
  const VertexSet clique = max_clique(g);
  detail::ColorSolver s{g, n + 1, {}, std::vector<int>(n, -1)};
  s.lower = clique.size();
  int k = 0;
  for (int v : clique.to_vector()) s.colors[v] = k++;
  s.run(clique.size(), k);
  if (witness) *witness = s.best_colors;
  return s.best;
}

// Minimum number of cliques covering all vertices. Triangle-free graphs use
// the matching identity theta = n - nu; everything else colors the
// complement. parts receives the cover as vertex sets when non-null.
inline int clique_cover_number(const Graph& g, std::vector<VertexSet>* parts = nullptr) {
  const int n = g.order();
  if (parts) parts->clear();
  if (n == 0) return 0;
  if (is_triangle_free(g)) {
    const MatchingResult m = maximum_matching(g);
    if (parts) {
      VertexSet matched;
      for (auto [u, v] : m.edges) {
        VertexSet e;
        e.add(u);
        e.add(v);
        parts->push_back(e);
        matched.add(u);
        matched.add(v);
      }
      for (int v = 0; v < n; ++v)
        if (!matched.contains(v)) parts->push_back(VertexSet::single(v));
    }
    return n - m.size;
  }
  std::vector<int> colors;
  const int theta = chromatic_number(g.complement(), &colors);
  if (parts) {
    parts->assign(static_cast<std::size_t>(theta), VertexSet());
    for (int v = 0; v < n; ++v) (*parts)[static_cast<std::size_t>(colors[v])].add(v);
  }
  return theta;
}

struct PerfectionVerdict {
  bool perfect = true;
  VertexSet witness;          // odd hole or antihole vertices, empty if perfect
  bool witness_in_complement = false;
};

namespace detail {

// Does s induce a chordless cycle? Degree exactly 2 for every member plus
// connectivity of the induced subgraph.
inline bool induces_cycle(const Graph& g, std::uint64_t s) {
  for (std::uint64_t m = s; m; m &= m - 1)
    if (std::popcount(g.neighbors(std::countr_zero(m)) & s) != 2) return false;
  std::uint64_t comp = 1ULL << std::countr_zero(s);
  for (;;) {
    std::uint64_t grown = comp;
    for (std::uint64_t m = comp; m; m &= m - 1) grown |= g.neighbors(std::countr_zero(m)) & s;
    if (grown == comp) break;
    comp = grown;
  }
  return comp == s;
}

}  // namespace detail

// Odd hole / odd antihole search by subset scan; exponential, hence the
// order cap. Fine through n = 20 (about a million subsets).
inline PerfectionVerdict is_perfect(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw budget_error("perfection test capped at 20 vertices");
  const Graph co = g.complement();
  for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
    const int size = std::popcount(s);
    if (size < 5 || size % 2 == 0) continue;
    if (detail::induces_cycle(g, s)) return {false, VertexSet(s), false};
    if (detail::induces_cycle(co, s)) return {false, VertexSet(s), true};
  }
  return {};
}

struct GreedyCover {
  std::vector<VertexSet> cliques3;  // greedily removed cliques of size >= 3
  std::vector<VertexSet> edges;     // then maximum cliques of size 2
  VertexSet singletons;             // whatever is left
  int surplus = 0;                  // sum of (|Q| - 2) over cliques3
  int gap_bound = 0;                // derived upper bound on theta - alpha
};

// Repeatedly strip a maximum clique (lexicographically least witness).
// Cliques of size >= 3 cover two vertices "for free" plus surplus; the
// count convention here charges |Q| - 2 per such clique. The leftover
// edge/singleton region B yields gap <= (n - surplus - alpha(B)) / 2.
inline GreedyCover greedy_clique_cover(const Graph& g) {
  GreedyCover out;
  VertexSet residual = g.vertices();
  while (!residual.empty()) {
    const VertexSet q = max_clique(g, residual);
    if (q.size() >= 3) {
      out.cliques3.push_back(q);
      out.surplus += q.size() - 2;
    } else if (q.size() == 2) {
      out.edges.push_back(q);
    } else {
      out.singletons = residual;
      break;
    }
    residual = residual - q;
  }
  VertexSet b = out.singletons;
  for (const VertexSet& e : out.edges) b = b | e;
  out.gap_bound = (g.order() - out.surplus - stable_set_number(g, b)) / 2;
  return out;
}

struct InvariantReport {
  int n = 0;
  int alpha = 0, omega = 0, chi = 0, theta = 0, nu = 0;
  std::optional<int> zeta;
  int gap = 0, chromatic_gap = 0;
  VertexSet stable_witness, clique_witness;
  std::vector<int> coloring;
  std::vector<VertexSet> cover_witness;
  std::vector<std::pair<int, int>> matching_witness;
};

inline InvariantReport compute_invariants(const Graph& g) {
  InvariantReport r;
  r.n = g.order();
  r.alpha = stable_set_number(g);
  r.stable_witness = max_stable_set(g);
  r.omega = clique_number(g);
  r.clique_witness = max_clique(g);
  r.chi = chromatic_number(g, &r.coloring);
  r.theta = clique_cover_number(g, &r.cover_witness);
  const MatchingResult m = maximum_matching(g);
  r.nu = m.size;
  r.matching_witness = m.edges;
  r.zeta = edge_cover_number(g);
  r.gap = r.theta - r.alpha;
  r.chromatic_gap = r.chi - r.omega;
  return r;
}

inline nlohmann::json to_json(const VertexSet& s) { return s.to_vector(); }

inline nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json w;
  w["stable_set"] = to_json(r.stable_witness);
  w["clique"] = to_json(r.clique_witness);
  w["coloring"] = r.coloring;
  {
    nlohmann::json parts = nlohmann::json::array();
    for (const VertexSet& q : r.cover_witness) parts.push_back(to_json(q));
    w["clique_cover"] = parts;
  }
  {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : r.matching_witness) edges.push_back({u, v});
    w["matching"] = edges;
  }
  nlohmann::json j;
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["omega"] = r.omega;
  j["chi"] = r.chi;
  j["theta"] = r.theta;
  j["nu"] = r.nu;
  if (r.zeta)
    j["zeta"] = *r.zeta;
  else
    j["zeta"] = nullptr;
  j["gap"] = r.gap;
  j["chromatic_gap"] = r.chromatic_gap;
  j["witnesses"] = w;
  return j;
}

}  // namespace gaplab

#endif  // GAPLAB_INVARIANTS_HPP
