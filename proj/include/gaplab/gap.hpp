#ifndef GAPLAB_GAP_HPP
#define GAPLAB_GAP_HPP

// The covering-versus-packing gap theta - alpha, studied over all induced
// subgraphs: full subset profiles (exponential tables, hence budgeted),
// criticality verdicts, gap chains, the perfectness gap, and the
// clique-Helly machinery used by the structural tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gaplab/graph.hpp"
#include "gaplab/invariants.hpp"

namespace gaplab {

inline constexpr int kDefaultProfileBudget = 12;
inline constexpr int kMaxProfileBudget = 16;

inline int gap(const Graph& g) { return clique_cover_number(g) - stable_set_number(g); }

inline int chromatic_gap(const Graph& g) {
  return chromatic_number(g) - clique_number(g);
}

// alpha and theta for every subset of V(G). 2^n entries each; callers must
// opt in beyond the default budget (hard cap 16).
struct SubsetGapProfile {
  int n = 0;
  std::vector<std::uint8_t> alpha;
  std::vector<std::uint8_t> theta;

  int gap_of(std::uint32_t mask) const { return theta[mask] - alpha[mask]; }
};

inline SubsetGapProfile subset_gap_profile(const Graph& g, int budget = kDefaultProfileBudget) {
  const int n = g.order();
  if (budget > kMaxProfileBudget)
    throw budget_error("subset profile budget capped at 16");
  if (n > budget)
    throw budget_error("subset profile needs an explicit budget of at least " +
                       std::to_string(n) + " for this graph");
  SubsetGapProfile p;
  p.n = n;
  const std::size_t size = 1ULL << n;
  p.alpha.assign(size, 0);
  p.theta.assign(size, 0);

  for (std::uint32_t s = 1; s < size; ++s) {
    const int v = std::countr_zero(s);
    const std::uint32_t without = s & (s - 1);
    // Either v stays out, or v joins and its neighbors leave.
    const std::uint8_t out = p.alpha[without];
    const std::uint8_t in =
        static_cast<std::uint8_t>(1 + p.alpha[s & ~static_cast<std::uint32_t>(g.closed_neighbors(v))]);
    p.alpha[s] = std::max(out, in);
  }

  // theta: cover the lowest vertex by some clique inside s, recurse on the
  // rest. Extending cliques only upward enumerates each clique once.
  struct Frame {
    std::uint32_t removed;
    std::uint32_t cand;
  };
  std::vector<Frame> stack;
  stack.reserve(256);
  for (std::uint32_t s = 1; s < size; ++s) {
    const int v = std::countr_zero(s);
    std::uint8_t best = 255;
    stack.push_back({s & (s - 1), s & static_cast<std::uint32_t>(g.neighbors(v))});
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      const std::uint8_t with = static_cast<std::uint8_t>(1 + p.theta[f.removed]);
      if (with < best) best = with;
      for (std::uint32_t m = f.cand; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        stack.push_back({f.removed & ~(1u << u),
                         (m & (m - 1)) & static_cast<std::uint32_t>(g.neighbors(u))});
      }
    }
    p.theta[s] = best;
  }
  return p;
}

struct CriticalityVerdict {
  int gap = 0;
  bool weak_critical = false;  // every one-vertex deletion lowers the gap
  bool full_critical = false;  // every proper induced subgraph has lower gap
  VertexSet witness;           // when not full: proper subset with gap >= gap(G)
};

// Vertex-deletion screening alone is not conclusive: graphs exist where all
// one-vertex deletions lower the gap yet a smaller induced subgraph still
// attains it, so the full verdict scans every subset of the profile.
inline CriticalityVerdict is_gap_critical(const Graph& g, int budget = kDefaultProfileBudget) {
  const SubsetGapProfile p = subset_gap_profile(g, budget);
  const int n = g.order();
  const std::uint32_t full = static_cast<std::uint32_t>(VertexSet::all(n).bits);
  CriticalityVerdict v;
  v.gap = p.gap_of(full);

  v.weak_critical = true;
  for (int u = 0; u < n; ++u)
    if (p.gap_of(full & ~(1u << u)) >= v.gap) {
      v.weak_critical = false;
      break;
    }

  // Deterministic witness: largest offending gap, then fewest vertices, then
  // smallest mask.
  bool found = false;
  int best_gap = -1, best_size = -1;
  std::uint32_t best_mask = 0;
  for (std::uint32_t s = 0; s < full; ++s) {
    const int sg = p.gap_of(s);
    if (sg < v.gap) continue;
    const int size = std::popcount(s);
    if (!found || sg > best_gap || (sg == best_gap && size < best_size)) {
      found = true;
      best_gap = sg;
      best_size = size;
      best_mask = s;
    }
  }
  v.full_critical = !found;
  if (found) v.witness = VertexSet(best_mask);
  if (v.gap == 0) {
    // Gap zero: the empty subset ties at gap 0, so by convention only
    // graphs with positive gap can be critical.
    v.weak_critical = false;
    v.full_critical = false;
    v.witness = VertexSet(0);
  }
  return v;
}

struct GapChainStep {
  VertexSet set;
  int gap = 0;
};

// Nested subsets V = S_0 > S_1 > ... realizing every gap value from gap(G)
// down to 0, built by always deleting the vertex that minimizes the next
// gap. A minimizing vertex never raises the gap: if every deletion raised
// it, every vertex would lie in every maximum stable set, forcing an
// edgeless graph with gap 0.
inline std::vector<GapChainStep> gap_chain(const Graph& g, int budget = kDefaultProfileBudget) {
  const SubsetGapProfile p = subset_gap_profile(g, budget);
  std::uint32_t s = static_cast<std::uint32_t>(VertexSet::all(g.order()).bits);
  std::vector<GapChainStep> chain{{VertexSet(s), p.gap_of(s)}};
  while (s) {
    int best_v = -1, best_gap = 0;
    for (std::uint32_t m = s; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      const int gu = p.gap_of(s & ~(1u << u));
      if (best_v == -1 || gu < best_gap) {
        best_v = u;
        best_gap = gu;
      }
    }
    s &= ~(1u << best_v);
    if (best_gap < chain.back().gap) chain.push_back({VertexSet(s), best_gap});
  }
  return chain;
}

struct PerfectnessGap {
  int value = 0;
  VertexSet witness;
  bool witness_in_complement = false;
};

// Max gap over all induced subgraphs of g and of its complement.
inline PerfectnessGap perfectness_gap(const Graph& g, int budget = kDefaultProfileBudget) {
  const SubsetGapProfile side = subset_gap_profile(g, budget);
  const SubsetGapProfile co = subset_gap_profile(g.complement(), budget);
  const std::uint32_t full = static_cast<std::uint32_t>(VertexSet::all(g.order()).bits);
  PerfectnessGap out;
  for (std::uint32_t s = 0; s <= full; ++s) {
    out.value = std::max({out.value, side.gap_of(s), co.gap_of(s)});
    if (s == full) break;
  }
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (side.gap_of(s) == out.value) {
      out.witness = VertexSet(s);
      out.witness_in_complement = false;
      break;
    }
    if (co.gap_of(s) == out.value) {
      out.witness = VertexSet(s);
      out.witness_in_complement = true;
      break;
    }
    if (s == full) break;
  }
  return out;
}

struct CliqueHellyVerdict {
  bool clique_helly = true;
  VertexSet bad_triangle;  // extension without a universal vertex
};

// Extended-triangle criterion: the cliques of g have the Helly property iff
// for every triangle T, the set of vertices adjacent to at least two
// corners of T contains a vertex adjacent to all others in that set.
inline CliqueHellyVerdict clique_helly_analysis(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw budget_error("clique-Helly analysis capped at 20 vertices");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        std::uint64_t ext = 0;
        for (int v = 0; v < n; ++v) {
          const int hits = (g.adjacent(v, a) || v == a ? 1 : 0) +
                           (g.adjacent(v, b) || v == b ? 1 : 0) +
                           (g.adjacent(v, c) || v == c ? 1 : 0);
          if (hits >= 2) ext |= 1ULL << v;
        }
        bool universal = false;
        for (std::uint64_t m = ext; m && !universal; m &= m - 1) {
          const int v = std::countr_zero(m);
          if ((ext & ~g.closed_neighbors(v)) == 0) universal = true;
        }
        if (!universal) {
          VertexSet t;
          t.add(a);
          t.add(b);
          t.add(c);
          return {false, t};
        }
      }
    }
  return {};
}

struct TriangularClaw {
  bool found = false;
  VertexSet triangle;
  VertexSet tips;
};

// Six-vertex pattern: a triangle t1 t2 t3 plus tips s1 s2 s3 where each s_i
// sees the two corners other than t_i and misses t_i itself. Tips may be
// adjacent to each other; tip sets of different corners are disjoint by
// construction, so the pattern exists iff all three sets are non-empty.
// Absence of the pattern certifies the Helly property for cliques: if the
// extended-triangle criterion fails at T, each corner t_i admits a witness
// in ext(T) outside N[t_i], and those witnesses form the tips.
inline TriangularClaw find_triangular_claw(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw budget_error("triangular claw search capped at 20 vertices");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        const std::uint64_t tri = (1ULL << a) | (1ULL << b) | (1ULL << c);
        const int t[3] = {a, b, c};
        std::uint64_t cand[3];
        for (int i = 0; i < 3; ++i) {
          const int self = t[i], x = t[(i + 1) % 3], y = t[(i + 2) % 3];
          cand[i] = g.neighbors(x) & g.neighbors(y) & ~g.closed_neighbors(self) & ~tri;
        }
        if (cand[0] && cand[1] && cand[2]) {
          TriangularClaw out;
          out.found = true;
          out.triangle = VertexSet(tri);
          out.tips = VertexSet((1ULL << std::countr_zero(cand[0])) |
                               (1ULL << std::countr_zero(cand[1])) |
                               (1ULL << std::countr_zero(cand[2])));
          return out;
        }
      }
    }
  return {};
}

struct DisjointTriangles {
  bool found = false;
  VertexSet first, second;
};

inline DisjointTriangles two_disjoint_triangles(const Graph& g) {
  const int n = g.order();
  auto triangle_in = [&](std::uint64_t allowed) -> VertexSet {
    for (std::uint64_t ma = allowed; ma; ma &= ma - 1) {
      const int a = std::countr_zero(ma);
      for (std::uint64_t mb = g.neighbors(a) & allowed & ~((2ULL << a) - 1); mb; mb &= mb - 1) {
        const int b = std::countr_zero(mb);
        const std::uint64_t common = g.neighbors(a) & g.neighbors(b) & allowed;
        if (common) {
          VertexSet t;
          t.add(a);
          t.add(b);
          t.add(std::countr_zero(common));
          return t;
        }
      }
    }
    return VertexSet(0);
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (std::uint64_t mc = g.neighbors(a) & g.neighbors(b) & ~((2ULL << b) - 1); mc;
           mc &= mc - 1) {
        const int c = std::countr_zero(mc);
        const std::uint64_t rest =
            g.vertices().bits & ~(1ULL << a) & ~(1ULL << b) & ~(1ULL << c);
        const VertexSet other = triangle_in(rest);
        if (!other.empty()) {
          VertexSet t;
          t.add(a);
          t.add(b);
          t.add(c);
          return {true, t, other};
        }
      }
    }
  return {};
}

}  // namespace gaplab

#endif  // GAPLAB_GAP_HPP
