#ifndef GAPLAB_CANONICAL_HPP
#define GAPLAB_CANONICAL_HPP

// Canonical labeling for graphs on at most 16 vertices, via equitable
// partition refinement plus individualization with backtracking. The
// canonical form is the lexicographically least relabeled adjacency (row
// array order), minimized over the leaves of the search tree. Automorphisms
// discovered at equal leaves are collected; candidate branches equivalent to
// an already-explored sibling under the prefix-fixing subgroup are pruned,
// which keeps highly symmetric graphs cheap without risking completeness.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gaplab/graph.hpp"

namespace gaplab {

inline constexpr int kCanonMax = 16;

struct CanonicalForm {
  std::uint8_t n = 0;
  std::array<std::uint16_t, kCanonMax> rows{};

  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& o) const {
    if (n != o.n) return n < o.n;
    return rows < o.rows;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ULL ^ n;
    for (int i = 0; i < n; ++i) {
      h ^= rows[static_cast<std::size_t>(i)];
      h *= 1099511628211ULL;
    }
    return h;
  }

  Graph to_graph() const {
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((rows[static_cast<std::size_t>(i)] >> j) & 1) g.add_edge(i, j);
    return g;
  }

  std::string graph6() const { return encode_graph6(to_graph()); }
};

struct CanonicalResult {
  CanonicalForm form;
  std::array<std::uint8_t, kCanonMax> position{};  // canonical index of each vertex
  std::vector<std::array<std::uint8_t, kCanonMax>> generators;
  std::array<std::uint8_t, kCanonMax> orbit{};     // least vertex of each orbit

  bool group_trivial() const { return generators.empty(); }
};

// Reusable scratch space: enumeration canonicalizes millions of graphs and
// must not reallocate per call.
class CanonicalWorkspace {
 public:
  const CanonicalResult& run(const std::uint16_t* adj, int n) {
    if (n < 0 || n > kCanonMax) throw budget_error("canonical labeling capped at 16 vertices");
    n_ = n;
    for (int v = 0; v < n; ++v) adj_[v] = adj[v];
    result_.generators.clear();
    for (int v = 0; v < n; ++v) parent_[v] = static_cast<std::uint8_t>(v);
    have_best_ = false;
    path_len_ = 0;

    if (n == 0) {
      result_.form = CanonicalForm{};
      return result_;
    }

    Node root;
    for (int i = 0; i < n; ++i) {
      root.order[i] = static_cast<std::uint8_t>(i);
      root.head[i] = 0;
    }
    root.head[0] = 1;
    refine(root);
    search(root);

    result_.form.n = static_cast<std::uint8_t>(n);
    result_.form.rows = best_rows_;
    for (int i = 0; i < n; ++i) result_.position[best_order_[i]] = static_cast<std::uint8_t>(i);
    for (int v = 0; v < n; ++v) result_.orbit[v] = find(v);
    return result_;
  }

  const CanonicalResult& run(const Graph& g) {
    std::array<std::uint16_t, kCanonMax> rows{};
    if (g.order() > kCanonMax) throw budget_error("canonical labeling capped at 16 vertices");
    for (int v = 0; v < g.order(); ++v)
      rows[v] = static_cast<std::uint16_t>(g.neighbors(v));
    return run(rows.data(), g.order());
  }

 private:
  struct Node {
    std::array<std::uint8_t, kCanonMax> order;  // vertices in position order
    std::array<std::uint8_t, kCanonMax> head;   // 1 where a cell starts
  };

  std::uint8_t find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return static_cast<std::uint8_t>(v);
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[b] = static_cast<std::uint8_t>(a);
    else
      parent_[a] = static_cast<std::uint8_t>(b);
  }

  // Equitable refinement: within every cell, sort by the vector of neighbor
  // counts into the current cells (packed 4 bits per cell, cells in position
  // order) and split where the key changes. Repeat until no split.
  void refine(Node& nd) {
    for (;;) {
      // Current cell masks and per-vertex cell index.
      int ncells = 0;
      std::array<std::uint16_t, kCanonMax> cellmask{};
      for (int i = 0; i < n_; ++i) {
        if (nd.head[i]) ++ncells;
        cellmask[ncells - 1] = static_cast<std::uint16_t>(cellmask[ncells - 1] | (1u << nd.order[i]));
      }
      if (ncells == n_) return;

      std::array<std::uint64_t, kCanonMax> key{};
      for (int i = 0; i < n_; ++i) {
        const int v = nd.order[i];
        std::uint64_t k = 0;
        for (int c = 0; c < ncells; ++c)
          k |= static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(adj_[v] & cellmask[c])))
               << (4 * c);
        key[v] = k;
      }

      bool split = false;
      int s = 0;
      while (s < n_) {
        int e = s + 1;
        while (e < n_ && !nd.head[e]) ++e;
        // Insertion sort positions s..e-1 by key; stable, tiny ranges.
        for (int i = s + 1; i < e; ++i) {
          const std::uint8_t v = nd.order[i];
          int j = i;
          while (j > s && key[nd.order[j - 1]] > key[v]) {
            nd.order[j] = nd.order[j - 1];
            --j;
          }
          nd.order[j] = v;
        }
        for (int i = s + 1; i < e; ++i)
          if (key[nd.order[i]] != key[nd.order[i - 1]] && !nd.head[i]) {
            nd.head[i] = 1;
            split = true;
          }
        s = e;
      }
      if (!split) return;
    }
  }

  bool discrete(const Node& nd) const {
    for (int i = 0; i < n_; ++i)
      if (!nd.head[i]) return false;
    return true;
  }

  void handle_leaf(const Node& nd) {
    std::array<std::uint16_t, kCanonMax> rows{};
    for (int i = 0; i < n_; ++i) {
      const int v = nd.order[i];
      for (int j = i + 1; j < n_; ++j)
        if ((adj_[v] >> nd.order[j]) & 1) {
          rows[i] = static_cast<std::uint16_t>(rows[i] | (1u << j));
          rows[j] = static_cast<std::uint16_t>(rows[j] | (1u << i));
        }
    }
    if (!have_best_ || rows < best_rows_) {
      have_best_ = true;
      best_rows_ = rows;
      best_order_ = nd.order;
      return;
    }
    if (rows == best_rows_) {
      // Equal leaves define an automorphism mapping the best labeling onto
      // this one.
      std::array<std::uint8_t, kCanonMax> g{};
      bool identity = true;
      for (int i = 0; i < n_; ++i) {
        g[best_order_[i]] = nd.order[i];
        identity &= best_order_[i] == nd.order[i];
      }
      if (!identity) {
        result_.generators.push_back(g);
        for (int v = 0; v < n_; ++v) unite(v, g[v]);
      }
    }
  }

  void search(const Node& nd) {
    if (discrete(nd)) {
      handle_leaf(nd);
      return;
    }
    // First non-singleton cell is the branching cell.
    int s = 0;
    for (;;) {
      int e = s + 1;
      while (e < n_ && !nd.head[e]) ++e;
      if (e - s > 1) break;
      s = e;
    }
    int e = s + 1;
    while (e < n_ && !nd.head[e]) ++e;

    std::array<std::uint8_t, kCanonMax> explored{};
    int explored_count = 0;
    for (int i = s; i < e; ++i) {
      const std::uint8_t v = nd.order[i];
      if (explored_count > 0 && !result_.generators.empty() && pruned(v, explored.data(), explored_count))
        continue;
      explored[explored_count++] = v;

      Node child = nd;
      // Move v to the front of its cell as a singleton.
      int at = s;
      while (child.order[at] != v) ++at;
      for (int j = at; j > s; --j) child.order[j] = child.order[j - 1];
      child.order[s] = v;
      child.head[s + 1] = 1;

      path_[path_len_++] = v;
      refine(child);
      search(child);
      --path_len_;
    }
  }

  // Is candidate v equivalent to an explored sibling under some product of
  // known automorphisms fixing the individualized prefix pointwise?
  bool pruned(std::uint8_t v, const std::uint8_t* explored, int explored_count) {
    std::array<std::uint8_t, kCanonMax> rep;
    for (int u = 0; u < n_; ++u) rep[u] = static_cast<std::uint8_t>(u);
    auto local_find = [&](int x) {
      while (rep[x] != x) {
        rep[x] = rep[rep[x]];
        x = rep[x];
      }
      return x;
    };
    for (const auto& g : result_.generators) {
      bool fixes = true;
      for (int j = 0; j < path_len_ && fixes; ++j) fixes = g[path_[j]] == path_[j];
      if (!fixes) continue;
      for (int u = 0; u < n_; ++u) {
        const int a = local_find(u), b = local_find(g[u]);
        if (a != b) rep[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
      }
    }
    const int fv = local_find(v);
    for (int i = 0; i < explored_count; ++i)
      if (local_find(explored[i]) == fv) return true;
    return false;
  }

  int n_ = 0;
  std::array<std::uint16_t, kCanonMax> adj_{};
  std::array<std::uint8_t, kCanonMax> parent_{};
  std::array<std::uint8_t, kCanonMax> path_{};
  int path_len_ = 0;
  bool have_best_ = false;
  std::array<std::uint16_t, kCanonMax> best_rows_{};
  std::array<std::uint8_t, kCanonMax> best_order_{};
  CanonicalResult result_;
};

inline CanonicalResult canonicalize(const Graph& g) {
  CanonicalWorkspace ws;
  return ws.run(g);
}

inline CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace gaplab

#endif  // GAPLAB_CANONICAL_HPP
