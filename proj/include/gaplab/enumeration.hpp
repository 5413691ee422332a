#ifndef GAPLAB_ENUMERATION_HPP
#define GAPLAB_ENUMERATION_HPP

// Isomorph-free exhaustive generation by canonical augmentation, plus the
// census tables built on it. Graphs grow one vertex at a time; a child is
// kept iff the new vertex lands in the same automorphism orbit as the
// canonically deleted vertex, so each isomorphism class appears exactly
// once. Cheap invariant filters reject most candidates before the full
// canonical labeling runs.

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gaplab/canonical.hpp"
#include "gaplab/gap.hpp"
#include "gaplab/graph.hpp"
#include "gaplab/invariants.hpp"

namespace gaplab {

struct EnumerateOptions {
  bool triangle_free = false;
  int max_alpha = 0;                       // 0 = unrestricted
  std::function<bool(const Graph&)> keep;  // extra filter; must be hereditary
  bool allow_deep = false;
};

struct CensusOptions {
  int jobs = 1;
  bool allow_deep = false;
  int witness_cap = 8;
};

struct CensusRow {
  int n = 0;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> gap_counts;  // index = gap value
  std::vector<std::string> witnesses;     // canonical graph6 of max-gap graphs, capped
  int max_gap() const { return static_cast<int>(gap_counts.size()) - 1; }
};

namespace detail {

inline Graph graph_from_rows(const std::uint16_t* rows, int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((rows[u] >> v) & 1) g.add_edge(u, v);
  return g;
}

class Enumerator {
 public:
  // Called once per isomorphism class; return false to prune the subtree.
  using NodeFn = std::function<bool(const std::uint16_t*, int)>;

  Enumerator(bool triangle_free, int max_alpha, const std::function<bool(const Graph&)>* keep)
      : tfree_(triangle_free), max_alpha_(max_alpha), keep_(keep) {}

  void run(int depth, const NodeFn& fn) {
    if (depth < 1) return;
    std::uint16_t rows[kCanonMax] = {};
    visit(rows, 1, depth, fn);
  }

  // Expands a node that was already visited elsewhere; lets workers resume
  // the search from stored level-L parents.
  void expand(const std::uint16_t* rows, int p, int depth, const NodeFn& fn) {
    // The parent's group, copied out before the workspace is reused.
    bool trivial;
    std::vector<std::array<std::uint8_t, kCanonMax>> gens;
    {
      const CanonicalResult& pr = ws_.run(rows, p);
      trivial = pr.group_trivial();
      if (!trivial) gens = pr.generators;
    }

    std::vector<std::uint32_t> masks;
    if (tfree_) {
      collect_stable_masks(rows, p, masks);
    } else {
      masks.resize(std::size_t(1) << p);
      for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
    }
    if (!trivial) keep_orbit_minima(p, gens, masks);

    std::uint16_t child[kCanonMax];
    for (const std::uint32_t mask : masks) {
      for (int v = 0; v < p; ++v)
        child[v] = static_cast<std::uint16_t>(rows[v] | (((mask >> v) & 1u) << p));
      child[p] = static_cast<std::uint16_t>(mask);
      if (!augmentation_canonical(child, p + 1)) continue;
      visit(child, p + 1, depth, fn);
    }
  }

 private:
  void visit(std::uint16_t* rows, int n, int depth, const NodeFn& fn) {
    if (!admissible(rows, n)) return;
    if (!fn(rows, n)) return;
    if (n < depth) expand(rows, n, depth, fn);
  }

  bool admissible(const std::uint16_t* rows, int n) {
    if (max_alpha_ == 0 && !keep_) return true;
    const Graph g = graph_from_rows(rows, n);
    if (max_alpha_ > 0 && stable_set_number(g) > max_alpha_) return false;
    return !keep_ || (*keep_)(g);
  }

  // All independent sets of the parent, i.e. the neighborhoods that keep
  // the child triangle-free.
  void collect_stable_masks(const std::uint16_t* rows, int p, std::vector<std::uint32_t>& out) {
    out.push_back(0);
    const std::uint32_t full = (p == 32 ? ~0u : (1u << p) - 1u);
    grow_stable(rows, 0u, full, out);
  }

  void grow_stable(const std::uint16_t* rows, std::uint32_t mask, std::uint32_t avail,
                   std::vector<std::uint32_t>& out) {
    while (avail) {
      const int v = std::countr_zero(avail);
      avail &= avail - 1;
      const std::uint32_t m2 = mask | (1u << v);
      out.push_back(m2);
      grow_stable(rows, m2, avail & ~static_cast<std::uint32_t>(rows[v]), out);
    }
  }

  // One representative (the numeric minimum) per orbit of candidate masks
  // under the parent's automorphisms. Without this, symmetric parents
  // would emit the same child class several times.
  void keep_orbit_minima(int p, const std::vector<std::array<std::uint8_t, kCanonMax>>& gens,
                         std::vector<std::uint32_t>& masks) {
    std::vector<std::uint8_t> state(std::size_t(1) << p, 0);  // 1 keep, 2 drop
    std::vector<std::uint32_t> queue;
    for (const std::uint32_t m : masks) {
      if (state[m]) continue;
      queue.assign(1, m);
      std::uint32_t best = m;
      std::size_t head = 0;
      state[m] = 2;
      while (head < queue.size()) {
        const std::uint32_t x = queue[head++];
        for (const auto& g : gens) {
          std::uint32_t y = 0;
          for (std::uint32_t rest = x; rest; rest &= rest - 1)
            y |= 1u << g[static_cast<std::size_t>(std::countr_zero(rest))];
          if (!state[y]) {
            state[y] = 2;
            queue.push_back(y);
          }
        }
      }
      for (const std::uint32_t x : queue) best = std::min(best, x);
      state[best] = 1;
    }
    std::erase_if(masks, [&](std::uint32_t m) { return state[m] != 1; });
  }

  // Accept the child iff the new vertex (index n-1) is equivalent to the
  // canonically deleted one: both must sit in the class minimizing
  // (degree, sorted neighbor degrees), and when that class is ambiguous,
  // in the same automorphism orbit.
  bool augmentation_canonical(const std::uint16_t* rows, int n) {
    int deg[kCanonMax];
    int dmin = INT_MAX;
    for (int v = 0; v < n; ++v) {
      deg[v] = std::popcount(rows[v]);
      dmin = std::min(dmin, deg[v]);
    }
    const int vn = n - 1;
    if (deg[vn] > dmin) return false;

    int cls[kCanonMax];
    int csz = 0;
    for (int v = 0; v < n; ++v)
      if (deg[v] == dmin) cls[csz++] = v;
    if (csz == 1) return true;  // the class is {v_new}

    // Refine by the sorted degrees of each candidate's neighbors.
    std::uint8_t key[kCanonMax][kCanonMax];
    for (int i = 0; i < csz; ++i) {
      int len = 0;
      for (std::uint32_t rest = rows[cls[i]]; rest; rest &= rest - 1)
        key[i][len++] = static_cast<std::uint8_t>(deg[std::countr_zero(rest)]);
      std::sort(key[i], key[i] + len);
    }
    int besti = 0;
    for (int i = 1; i < csz; ++i)
      if (std::lexicographical_compare(key[i], key[i] + dmin, key[besti], key[besti] + dmin))
        besti = i;
    int refined[kCanonMax];
    int rsz = 0;
    bool vn_in = false;
    for (int i = 0; i < csz; ++i)
      if (std::equal(key[i], key[i] + dmin, key[besti])) {
        refined[rsz++] = cls[i];
        vn_in = vn_in || cls[i] == vn;
      }
    if (!vn_in) return false;
    if (rsz == 1) return true;

    const CanonicalResult& cr = ws_.run(rows, n);
    int d = refined[0];
    for (int i = 1; i < rsz; ++i)
      if (cr.position[refined[i]] < cr.position[d]) d = refined[i];
    return cr.orbit[d] == cr.orbit[vn];
  }

  bool tfree_;
  int max_alpha_;
  const std::function<bool(const Graph&)>* keep_;
  CanonicalWorkspace ws_;
};

}  // namespace detail

// Streams exactly one representative per isomorphism class of order n, in
// a fixed deterministic order. Returns the class count.
inline std::uint64_t enumerate_graphs(int n, const std::function<void(const Graph&)>& emit,
                                      const EnumerateOptions& opts = {}) {
  if (n < 0) throw std::invalid_argument("enumerate_graphs: n must be >= 0");
  const int cap = opts.triangle_free ? 13 : (opts.allow_deep ? 12 : 11);
  if (n > cap)
    throw budget_error("enumeration capped at " + std::to_string(cap) + " vertices" +
                       (!opts.triangle_free && !opts.allow_deep ? " (12 behind allow_deep)" : ""));
  if (n == 0) {
    emit(Graph(0));
    return 1;
  }
  std::uint64_t count = 0;
  detail::Enumerator e(opts.triangle_free, opts.max_alpha, opts.keep ? &opts.keep : nullptr);
  e.run(n, [&](const std::uint16_t* rows, int k) {
    if (k == n) {
      ++count;
      emit(detail::graph_from_rows(rows, k));
    }
    return true;
  });
  return count;
}

inline std::uint64_t enumerate_triangle_free(int n, const std::function<void(const Graph&)>& emit,
                                             EnumerateOptions opts = {}) {
  opts.triangle_free = true;
  return enumerate_graphs(n, emit, opts);
}

namespace detail {

struct RowAcc {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> gap_counts;
  int wit_gap = -1;
  std::vector<std::string> wit;

  void add(const std::uint16_t* rows, int n, CanonicalWorkspace& ws, int cap) {
    const Graph g = graph_from_rows(rows, n);
    const int gv = gap(g);
    ++count;
    if (static_cast<int>(gap_counts.size()) <= gv) gap_counts.resize(gv + 1, 0);
    ++gap_counts[gv];
    if (gv < wit_gap) return;
    if (gv > wit_gap) {
      wit_gap = gv;
      wit.clear();
    }
    insert_witness(ws.run(rows, n).form.graph6(), cap);
  }

  void insert_witness(const std::string& s, int cap) {
    const auto it = std::lower_bound(wit.begin(), wit.end(), s);
    if (it != wit.end() && *it == s) return;
    wit.insert(it, s);
    if (static_cast<int>(wit.size()) > cap) wit.pop_back();
  }

  void merge(const RowAcc& o, int cap) {
    count += o.count;
    if (gap_counts.size() < o.gap_counts.size()) gap_counts.resize(o.gap_counts.size(), 0);
    for (std::size_t i = 0; i < o.gap_counts.size(); ++i) gap_counts[i] += o.gap_counts[i];
    if (o.wit_gap > wit_gap) {
      wit_gap = o.wit_gap;
      wit = o.wit;
    } else if (o.wit_gap == wit_gap) {
      for (const std::string& s : o.wit) insert_witness(s, cap);
    }
  }
};

inline std::vector<CensusRow> census_impl(int n_max, bool tfree, const CensusOptions& opts) {
  if (n_max < 1) throw std::invalid_argument("census: n_max must be >= 1");
  std::vector<RowAcc> acc(n_max + 1);
  CanonicalWorkspace ws;
  const auto tally = [](std::vector<RowAcc>& into, CanonicalWorkspace& w, int cap) {
    return [&into, &w, cap](const std::uint16_t* rows, int n) {
      into[n].add(rows, n, w, cap);
      return true;
    };
  };

  const int split = tfree ? 9 : 8;
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || n_max <= split + 1) {
    Enumerator e(tfree, 0, nullptr);
    e.run(n_max, tally(acc, ws, opts.witness_cap));
  } else {
    // Serial prefix to the split level, then workers own disjoint subtrees.
    std::vector<std::array<std::uint16_t, kCanonMax>> parents;
    {
      Enumerator e(tfree, 0, nullptr);
      const auto base = tally(acc, ws, opts.witness_cap);
      e.run(split, [&](const std::uint16_t* rows, int n) {
        base(rows, n);
        if (n == split) {
          std::array<std::uint16_t, kCanonMax> copy{};
          std::copy(rows, rows + n, copy.begin());
          parents.push_back(copy);
        }
        return true;
      });
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<RowAcc>> partial(jobs, std::vector<RowAcc>(n_max + 1));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        try {
          Enumerator e(tfree, 0, nullptr);
          CanonicalWorkspace wj;
          const auto local = tally(partial[j], wj, opts.witness_cap);
          for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= parents.size()) break;
            e.expand(parents[i].data(), split, n_max, local);
          }
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
    for (int j = 0; j < jobs; ++j)
      for (int n = 1; n <= n_max; ++n) acc[n].merge(partial[j][n], opts.witness_cap);
  }

  std::vector<CensusRow> out;
  for (int n = 1; n <= n_max; ++n) {
    CensusRow row;
    row.n = n;
    row.count = acc[n].count;
    row.gap_counts = std::move(acc[n].gap_counts);
    row.witnesses = std::move(acc[n].wit);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace detail

// Per-order gap histogram over all isomorphism classes.
inline std::vector<CensusRow> brute_gap_table(int n_max, const CensusOptions& opts = {}) {
  const int cap = opts.allow_deep ? 11 : 10;
  if (n_max > cap)
    throw budget_error("full census capped at " + std::to_string(cap) + " vertices");
  return detail::census_impl(n_max, false, opts);
}

// Same over triangle-free classes only.
inline std::vector<CensusRow> brute_gap2_table(int n_max, const CensusOptions& opts = {}) {
  if (n_max > 12) throw budget_error("triangle-free census capped at 12 vertices");
  return detail::census_impl(n_max, true, opts);
}

}  // namespace gaplab

#endif  // GAPLAB_ENUMERATION_HPP
