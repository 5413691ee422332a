#ifndef GAPLAB_CONSTRUCTIONS_HPP
#define GAPLAB_CONSTRUCTIONS_HPP

// Deterministic builders for the named graphs used throughout the test
// corpus, the Mycielski operator, the stable gap-optimal construction,
// and ingestion of external Ramsey-graph catalogs from graph6 files.

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaplab/formulas.hpp"
#include "gaplab/graph.hpp"
#include "gaplab/invariants.hpp"
#include "gaplab/ramsey.hpp"

namespace gaplab {

struct catalog_io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct catalog_validation_error : std::runtime_error {
  catalog_validation_error(int line_arg, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_arg) + ": " + what), line(line_arg) {}
  int line;
};

// Graphs claimed to be (3,l)-Ramsey graphs, keyed by l: order R(3,l) - 1,
// triangle-free, stability l - 1. Entries are only ever created validated.
struct RamseyCatalog {
  std::map<int, std::vector<Graph>> entries;
  std::string source;
};

namespace detail {

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph circulant_graph(int n, const std::vector<int>& dists) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int d : dists) g.add_edge(i, (i + d) % n);
  return g;
}

inline void require(bool ok, const std::string& name, const std::string& what) {
  if (!ok) throw std::logic_error(name + " failed its construction check: " + what);
}

}  // namespace detail

inline Graph mycielskian(const Graph& g) {
  const int n = g.order();
  if (2 * n + 1 > kMaxVertices)
    throw budget_error("mycielskian: result would exceed " + std::to_string(kMaxVertices) +
                       " vertices");
  Graph m(2 * n + 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) {
        m.add_edge(u, v);
        m.add_edge(n + u, v);  // shadow of u sees the neighbors of u
        m.add_edge(u, n + v);
      }
  for (int u = 0; u < n; ++u) m.add_edge(n + u, 2 * n);
  return m;
}

// The named catalog. Exact names take priority; the patterns Ck, Kk and
// tC5 cover the parameterized families. "C33" denotes the circular graph
// on 10 vertices where any three cyclically consecutive vertices form a
// clique, not a 33-cycle.
inline Graph named_graph(const std::string& name) {
  using detail::require;
  if (name == "R13") {
    const Graph g = detail::circulant_graph(13, {1, 5});
    require(g.edge_count() == 26 && clique_number(g) == 2 && stable_set_number(g) == 4, name,
            "expected 26 edges, omega 2, alpha 4");
    return g;
  }
  if (name == "W8" || name == "W81" || name == "W82") {
    Graph g = detail::circulant_graph(8, {1, 4});
    if (name != "W8") g.remove_edge(0, 4);
    if (name == "W82") g.remove_edge(1, 5);
    require(clique_number(g) == 2 && stable_set_number(g) == 3, name, "expected omega 2, alpha 3");
    return g;
  }
  if (name == "Ramsey44_17") {
    const Graph g = detail::circulant_graph(17, {1, 2, 4, 8});
    require(clique_number(g) == 3 && stable_set_number(g) == 3, name, "expected omega 3, alpha 3");
    return g;
  }
  if (name == "C33") {
    const Graph g = detail::circulant_graph(10, {1, 2});
    require(stable_set_number(g) == 3 && clique_cover_number(g) == 4, name,
            "expected alpha 3, theta 4");
    return g;
  }
  if (name == "ReplicatedC5") {
    const Graph g = detail::cycle_graph(5).replicate_vertex(0).replicate_vertex(2);
    require(clique_number(g) == 3 && chromatic_number(g) == 4, name, "expected omega 3, chi 4");
    return g;
  }
  if (name == "T6") {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 1);  // each tip sees the two corners it does not block
    g.add_edge(3, 2);
    g.add_edge(4, 0);
    g.add_edge(4, 2);
    g.add_edge(5, 0);
    g.add_edge(5, 1);
    return g;
  }
  if (name == "Grotzsch") {
    const Graph g = mycielskian(mycielskian(detail::complete_graph(2)));
    require(g.order() == 11 && clique_number(g) == 2 && chromatic_number(g) == 4, name,
            "expected n 11, triangle-free, chi 4");
    return g;
  }
  // Parameterized families.
  const auto small_int = [](const std::string& s) -> int {
    if (s.empty() || s.size() > 2) return -1;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
    return std::stoi(s);
  };
  if (name.size() >= 2 && name[0] == 'C') {
    const int k = small_int(name.substr(1));
    if (k >= 3 && k <= kMaxVertices) return detail::cycle_graph(k);
  }
  if (name.size() >= 2 && name[0] == 'K') {
    const int k = small_int(name.substr(1));
    if (k >= 1 && k <= kMaxVertices) return detail::complete_graph(k);
  }
  if (name.size() >= 3 && name.substr(name.size() - 2) == "C5") {
    const int t = small_int(name.substr(0, name.size() - 2));
    if (t >= 1 && 5 * t <= kMaxVertices) {
      Graph g(0);
      for (int i = 0; i < t; ++i) g = Graph::disjoint_union(g, detail::cycle_graph(5));
      return g;
    }
  }
  throw std::invalid_argument("named_graph: unknown name '" + name + "'");
}

// Built-in (3,l)-Ramsey graphs for l = 2..5; larger l must come from an
// ingested catalog.
inline const RamseyCatalog& builtin_catalog() {
  static const RamseyCatalog c = [] {
    RamseyCatalog out;
    out.source = "built-in";
    out.entries[2] = {named_graph("K2")};
    out.entries[3] = {named_graph("C5")};
    out.entries[4] = {named_graph("W8")};
    out.entries[5] = {named_graph("R13")};
    return out;
  }();
  return c;
}

namespace detail {

inline const Graph& ramsey_graph_for(int ell, const RamseyCatalog* extra) {
  if (extra) {
    const auto it = extra->entries.find(ell);
    if (it != extra->entries.end() && !it->second.empty()) return it->second.front();
  }
  const auto it = builtin_catalog().entries.find(ell);
  if (it != builtin_catalog().entries.end()) return it->second.front();
  throw std::runtime_error("no (3," + std::to_string(ell) +
                           ")-Ramsey graph available; ingest a catalog to extend coverage");
}

}  // namespace detail

// Builds a triangle-free n-vertex graph with stability alpha(n) and gap
// exactly gap2(n). Three shapes, by where n sits relative to R(3,alpha):
// an induced subgraph of a Ramsey graph in the generic case, two Ramsey
// graph components when n is a perfect sum, and a Ramsey graph plus an
// isolated vertex when n itself is an even Ramsey number. The output is
// re-verified before being returned.
inline Graph stable_gap_optimal(int n, const RamseyTable& table = default_table(),
                                const RamseyCatalog* catalog = nullptr) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("stable_gap_optimal: n out of range");
  const PartialValue a = alpha_of(n, table);
  if (!a.is_exact())
    throw std::runtime_error("stable_gap_optimal: alpha(" + std::to_string(n) +
                             ") is not settled by the table");
  const int alpha = *a.lo;
  const PartialValue ramsey = is_ramsey_number(n, table);
  const RamseyPerfectResult perfect = is_ramsey_perfect(n, table);

  Graph g(0);
  if (n % 2 == 0 && known_yes(ramsey)) {
    g = Graph::disjoint_union(detail::ramsey_graph_for(alpha, catalog), Graph(1));
  } else if (known_yes(perfect.verdict)) {
    const RamseyPerfectCertificate& c = *perfect.certificate;
    g = Graph::disjoint_union(detail::ramsey_graph_for(c.alpha1 + 1, catalog),
                              detail::ramsey_graph_for(c.alpha2 + 1, catalog));
  } else if ((n % 2 == 0 && !known_no(ramsey)) || !known_no(perfect.verdict)) {
    throw std::runtime_error("stable_gap_optimal: undecided Ramsey status at n = " +
                             std::to_string(n));
  } else {
    const Graph& host = detail::ramsey_graph_for(alpha + 1, catalog);
    VertexSet keep;
    for (int i = 0; i < n; ++i) keep.add(i);
    g = host.induced(keep);
  }

  const FormulaValue g2 = gap2_value(n, table);
  const int theta = clique_cover_number(g), stab = stable_set_number(g);
  if (g.order() != n || clique_number(g) > 2 || stab != alpha || !g2.value.is_exact() ||
      theta - stab != *g2.value.lo)
    throw std::logic_error("stable_gap_optimal: output failed verification at n = " +
                           std::to_string(n));
  return g;
}

// Reads a catalog of claimed (3,ell)-Ramsey graphs: one graph6 string per
// line, '#' starting a comment line. Every graph must have exactly
// R(3,ell) - 1 vertices, no triangle, and stability ell - 1.
inline RamseyCatalog ingest_ramsey_catalog(const std::string& path, int ell,
                                           const RamseyTable& table = default_table()) {
  if (ell < 2) throw std::invalid_argument("ingest_ramsey_catalog: ell must be >= 2");
  const PartialValue r = r3_bounds(table, ell);
  if (!r.is_exact())
    throw catalog_validation_error(0, "R(3," + std::to_string(ell) +
                                          ") is not exact in the table; order cannot be checked");
  const int want_order = *r.lo - 1;

  std::ifstream in(path);
  if (!in) throw catalog_io_error("cannot open catalog file: " + path);
  RamseyCatalog out;
  out.source = path;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    Graph g(0);
    try {
      g = decode_graph6(line);
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (g.order() != want_order)
      throw catalog_validation_error(line_no, "order " + std::to_string(g.order()) + " != " +
                                                  std::to_string(want_order));
    if (clique_number(g) > 2)
      throw catalog_validation_error(line_no, "graph contains a triangle");
    if (stable_set_number(g) != ell - 1)
      throw catalog_validation_error(
          line_no, "stability " + std::to_string(stable_set_number(g)) + " != " +
                       std::to_string(ell - 1));
    out.entries[ell].push_back(g);
  }
  return out;
}

}  // namespace gaplab

#endif  // GAPLAB_CONSTRUCTIONS_HPP
