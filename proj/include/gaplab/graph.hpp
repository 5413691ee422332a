#ifndef GAPLAB_GRAPH_HPP
#define GAPLAB_GRAPH_HPP

// Simple undirected graphs on at most 64 vertices, stored as one 64-bit
// adjacency row per vertex. Everything downstream (solvers, enumeration,
// formula checks) assumes this representation, so the cap is a hard error,
// not a soft limit.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gaplab {

inline constexpr int kMaxVertices = 64;

// Raised for malformed input data (graph6 strings, table files, catalogs).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a request exceeds a built-in resource cap (order, table size).
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A subset of {0, ..., 63} as a bit mask. Vertex i is bit (1 << i).
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

  static constexpr VertexSet all(int n) {
    return VertexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(1ULL << v); }

  constexpr bool contains(int v) const { return (bits >> v) & 1; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr int lowest() const { return std::countr_zero(bits); }

  constexpr void add(int v) { bits |= 1ULL << v; }
  constexpr void remove(int v) { bits &= ~(1ULL << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }
  constexpr bool operator==(const VertexSet&) const = default;

  // Members in increasing order.
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw budget_error("graph order " + std::to_string(n) + " outside [0, 64]");
  }

  int order() const { return n_; }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw parse_error("loop at vertex " + std::to_string(u));
    adj_[u] |= 1ULL << v;
    adj_[v] |= 1ULL << u;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(1ULL << v);
    adj_[v] &= ~(1ULL << u);
  }

  std::uint64_t neighbors(int v) const { return adj_[v]; }
  std::uint64_t closed_neighbors(int v) const { return adj_[v] | (1ULL << v); }
  int degree(int v) const { return std::popcount(adj_[v]); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
    return twice / 2;
  }

  VertexSet vertices() const { return VertexSet::all(n_); }

  bool operator==(const Graph&) const = default;

  Graph complement() const {
    Graph h(n_);
    const std::uint64_t full = VertexSet::all(n_).bits;
    for (int v = 0; v < n_; ++v) h.adj_[v] = (~adj_[v] & full) & ~(1ULL << v);
    return h;
  }

  // Subgraph induced by s, relabeled so the k-th lowest member becomes k.
  Graph induced(VertexSet s) const {
    s = s & vertices();
    Graph h(s.size());
    int row = 0;
    for (std::uint64_t m = s.bits; m; m &= m - 1, ++row) {
      const int v = std::countr_zero(m);
      std::uint64_t packed = 0;
      int col = 0;
      for (std::uint64_t m2 = s.bits; m2; m2 &= m2 - 1, ++col)
        if ((adj_[v] >> std::countr_zero(m2)) & 1) packed |= 1ULL << col;
      h.adj_[row] = packed;
    }
    return h;
  }

  Graph delete_vertex(int v) const {
    check_vertex(v);
    return induced(vertices() - VertexSet::single(v));
  }

  // Connected components as vertex sets, ordered by their lowest vertex.
  std::vector<VertexSet> components() const {
    std::vector<VertexSet> out;
    std::uint64_t left = vertices().bits;
    while (left) {
      std::uint64_t comp = 1ULL << std::countr_zero(left);
      for (;;) {
        std::uint64_t grown = comp;
        for (std::uint64_t m = comp; m; m &= m - 1) grown |= adj_[std::countr_zero(m)];
        grown &= vertices().bits;
        if (grown == comp) break;
        comp = grown;
      }
      out.push_back(VertexSet(comp));
      left &= ~comp;
    }
    return out;
  }

  bool connected() const { return n_ <= 1 || components().size() == 1; }

  static Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.n_ + b.n_ > kMaxVertices)
      throw budget_error("disjoint union would exceed 64 vertices");
    Graph h(a.n_ + b.n_);
    for (int v = 0; v < a.n_; ++v) h.adj_[v] = a.adj_[v];
    for (int v = 0; v < b.n_; ++v) h.adj_[a.n_ + v] = b.adj_[v] << a.n_;
    return h;
  }

  // Adds a twin of v adjacent to v and all of v's neighbors.
  Graph replicate_vertex(int v) const {
    check_vertex(v);
    if (n_ + 1 > kMaxVertices) throw budget_error("replication would exceed 64 vertices");
    Graph h(n_ + 1);
    for (int u = 0; u < n_; ++u) h.adj_[u] = adj_[u];
    const std::uint64_t closed = closed_neighbors(v);
    h.adj_[n_] = closed;
    for (std::uint64_t m = closed; m; m &= m - 1)
      h.adj_[std::countr_zero(m)] |= 1ULL << n_;
    return h;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw parse_error("vertex " + std::to_string(v) + " out of range for order " +
                        std::to_string(n_));
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// graph6 codec. Short form for n <= 62; the three-byte long form is accepted
// for n in {63, 64} only, anything larger is rejected. Encoding is the
// canonical one (zero padding bits), and decode insists on it so that
// encode(decode(s)) == s holds for every accepted string.

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int group = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

inline Graph decode_graph6(std::string_view s) {
  if (s.empty()) throw parse_error("graph6: empty string");
  for (char c : s)
    if (c < 63 || c > 126)
      throw parse_error("graph6: byte outside printable range 63..126");

  std::size_t pos = 0;
  int n;
  if (s[0] == 126) {
    // Long form. 126 126 ... (eight-byte form) would mean n >= 2^18; reject.
    if (s.size() >= 2 && s[1] == 126) throw parse_error("graph6: order exceeds 64");
    if (s.size() < 4) throw parse_error("graph6: truncated long-form order");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    if (n <= 62)
      throw parse_error("graph6: long form used for order " + std::to_string(n));
    pos = 4;
  } else {
    n = s[0] - 63;
    pos = 1;
  }
  if (n > kMaxVertices) throw parse_error("graph6: order exceeds 64");

  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos < body) throw parse_error("graph6: body shorter than order implies");
  if (s.size() - pos > body) throw parse_error("graph6: trailing bytes after body");

  Graph g(n);
  long at = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++at) {
      const int byte = s[pos + static_cast<std::size_t>(at / 6)] - 63;
      if ((byte >> (5 - at % 6)) & 1) g.add_edge(row, col);
    }
  }
  if (bits % 6 != 0) {
    const int last = s[pos + body - 1] - 63;
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw parse_error("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace gaplab

#endif  // GAPLAB_GRAPH_HPP
