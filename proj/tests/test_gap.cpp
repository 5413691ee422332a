#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "gaplab/gap.hpp"
#include "gaplab/graph.hpp"
#include "support/brute.hpp"
#include "support/util.hpp"

using namespace gaplab;
using namespace gaplab::testutil;

namespace {

// Triangle 0 1 2 plus tips 3 4 5; tip 3+i sees the two corners other than i.
Graph triangular_claw_graph() {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(3, 1);
  g.add_edge(3, 2);
  g.add_edge(4, 0);
  g.add_edge(4, 2);
  g.add_edge(5, 0);
  g.add_edge(5, 1);
  return g;
}

}  // namespace

TEST_CASE("subset profile matches brute force") {
  std::mt19937_64 rng(7001);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
    const SubsetGapProfile p = subset_gap_profile(g, 7);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const Graph h = g.induced(VertexSet(mask));
      REQUIRE(static_cast<int>(p.alpha[mask]) == brute_alpha(h));
      REQUIRE(static_cast<int>(p.theta[mask]) == brute_theta(h));
    }
  }
  // A structured case at the default budget boundary region.
  const Graph pet = petersen();
  const SubsetGapProfile p = subset_gap_profile(pet);
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    const Graph h = pet.induced(VertexSet(mask));
    REQUIRE(static_cast<int>(p.alpha[mask]) == brute_alpha(h));
    REQUIRE(static_cast<int>(p.theta[mask]) == brute_theta(h));
  }
}

TEST_CASE("profile budget is enforced") {
  std::mt19937_64 rng(7002);
  const Graph big = random_graph(13, 0.5, rng);
  REQUIRE_THROWS_AS(subset_gap_profile(big), budget_error);
  REQUIRE_THROWS_AS(subset_gap_profile(big, 17), budget_error);
  REQUIRE_NOTHROW(subset_gap_profile(big, 13));
  const SubsetGapProfile empty = subset_gap_profile(Graph(0));
  REQUIRE(empty.gap_of(0) == 0);
}

TEST_CASE("gap values of named graphs") {
  REQUIRE(gap(cycle(5)) == 1);
  REQUIRE(chromatic_gap(cycle(5)) == 1);
  REQUIRE(gap(complete(6)) == 0);
  REQUIRE(gap(cycle(7)) == 1);
  REQUIRE(gap(petersen()) == 1);
  REQUIRE(chromatic_gap(petersen()) == 1);
  REQUIRE(gap(Graph::disjoint_union(cycle(5), cycle(5))) == 2);
}

TEST_CASE("circulant on ten vertices is weakly but not fully critical") {
  const Graph g = circulant(10, {1, 2});
  const CriticalityVerdict v = is_gap_critical(g);
  REQUIRE(v.gap == 1);
  REQUIRE(v.weak_critical);
  REQUIRE_FALSE(v.full_critical);
  // The even-position five-cycle is the least witness.
  REQUIRE(v.witness.bits == 0b0101010101ULL);
}

TEST_CASE("five-cycle with two replicated vertices") {
  Graph g = cycle(5).replicate_vertex(0).replicate_vertex(2);
  REQUIRE(g.order() == 7);
  const CriticalityVerdict v = is_gap_critical(g);
  REQUIRE(v.gap == 1);
  REQUIRE_FALSE(v.weak_critical);
  REQUIRE_FALSE(v.full_critical);
  REQUIRE(v.witness.bits == 0b11111ULL);  // the original five-cycle
}

TEST_CASE("five-cycle itself is fully critical, perfect graphs are not") {
  const CriticalityVerdict c5 = is_gap_critical(cycle(5));
  REQUIRE(c5.gap == 1);
  REQUIRE(c5.weak_critical);
  REQUIRE(c5.full_critical);
  const CriticalityVerdict k4 = is_gap_critical(complete(4));
  REQUIRE(k4.gap == 0);
  REQUIRE_FALSE(k4.weak_critical);
  REQUIRE_FALSE(k4.full_critical);
}

TEST_CASE("thirteen-vertex circulant: gap three, fully critical, clean chain") {
  const Graph g = circulant(13, {1, 5});
  REQUIRE(is_triangle_free(g));
  const SubsetGapProfile p = subset_gap_profile(g, 13);
  REQUIRE(p.gap_of((1u << 13) - 1) == 3);
  const CriticalityVerdict v = is_gap_critical(g, 13);
  REQUIRE(v.gap == 3);
  REQUIRE(v.weak_critical);
  REQUIRE(v.full_critical);
  const auto chain = gap_chain(g, 13);
  REQUIRE(chain.size() == 4);
  for (int i = 0; i < 4; ++i) REQUIRE(chain[i].gap == 3 - i);
}

TEST_CASE("gap chain walks down one level at a time") {
  const Graph g = Graph::disjoint_union(cycle(5), cycle(5));
  const auto chain = gap_chain(g);
  REQUIRE(chain.size() == 3);
  REQUIRE(chain[0].set == VertexSet::all(10));
  REQUIRE(chain[0].gap == 2);
  REQUIRE(chain[1].gap == 1);
  REQUIRE(chain[2].gap == 0);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    REQUIRE((chain[i].set & chain[i - 1].set) == chain[i].set);
    REQUIRE(chain[i].set.size() < chain[i - 1].set.size());
  }

  std::mt19937_64 rng(7003);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 8;
    const Graph r = random_graph(n, 0.35, rng);
    const auto ch = gap_chain(r);
    REQUIRE(ch.front().set == VertexSet::all(n));
    REQUIRE(ch.back().gap == 0);
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (i > 0) {
        REQUIRE(ch[i].gap == ch[i - 1].gap - 1);
        REQUIRE((ch[i].set & ch[i - 1].set) == ch[i].set);
      }
      const Graph h = r.induced(ch[i].set);
      REQUIRE(brute_gap(h) == ch[i].gap);
    }
  }
}

TEST_CASE("deleting a clique lowers the gap by at most one") {
  std::mt19937_64 rng(7004);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = random_graph(n, 0.45, rng);
    const SubsetGapProfile p = subset_gap_profile(g, 7);
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t k = 1; k <= full; ++k) {
      if (!is_clique_set(g, k)) continue;
      REQUIRE(p.gap_of(full & ~k) >= p.gap_of(full) - 1);
    }
  }
}

TEST_CASE("perfectness gap") {
  const PerfectnessGap c5 = perfectness_gap(cycle(5));
  REQUIRE(c5.value == 1);
  REQUIRE(c5.witness == VertexSet::all(5));
  REQUIRE_FALSE(c5.witness_in_complement);

  REQUIRE(perfectness_gap(complete(6)).value == 0);

  const PerfectnessGap c7 = perfectness_gap(cycle(7));
  REQUIRE(c7.value == 1);
  REQUIRE(c7.witness == VertexSet::all(7));
  REQUIRE_FALSE(c7.witness_in_complement);

  const PerfectnessGap two = perfectness_gap(Graph::disjoint_union(cycle(5), cycle(5)));
  REQUIRE(two.value == 2);
  REQUIRE(two.witness == VertexSet::all(10));

  std::mt19937_64 rng(7005);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 6;
    const Graph g = random_graph(n, 0.4, rng);
    const Graph co = g.complement();
    int want = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      want = std::max(want, brute_gap(g.induced(VertexSet(mask))));
      want = std::max(want, brute_gap(co.induced(VertexSet(mask))));
    }
    REQUIRE(perfectness_gap(g).value == want);
  }
}

TEST_CASE("clique-Helly analysis on fixed graphs") {
  REQUIRE(clique_helly_analysis(cycle(5)).clique_helly);   // no triangles at all
  REQUIRE(clique_helly_analysis(complete(6)).clique_helly);
  REQUIRE(clique_helly_analysis(cycle(6)).clique_helly);
  REQUIRE(clique_helly_analysis(petersen()).clique_helly);
  REQUIRE(clique_helly_analysis(circulant(10, {1, 2})).clique_helly);

  const Graph claw = triangular_claw_graph();
  const CliqueHellyVerdict bad = clique_helly_analysis(claw);
  REQUIRE_FALSE(bad.clique_helly);
  REQUIRE(bad.bad_triangle.bits == 0b111ULL);

  // Adding a tip-tip edge keeps the Helly violation.
  Graph variant = claw;
  variant.add_edge(3, 4);
  REQUIRE_FALSE(clique_helly_analysis(variant).clique_helly);

  std::mt19937_64 rng(7006);
  const Graph big = random_graph(21, 0.5, rng);
  REQUIRE_THROWS_AS(clique_helly_analysis(big), budget_error);
}

TEST_CASE("triangular claw finder") {
  const TriangularClaw hit = find_triangular_claw(triangular_claw_graph());
  REQUIRE(hit.found);
  REQUIRE(hit.triangle.bits == 0b111ULL);
  REQUIRE(hit.tips.bits == 0b111000ULL);

  REQUIRE_FALSE(find_triangular_claw(complete(6)).found);
  REQUIRE_FALSE(find_triangular_claw(cycle(6)).found);
  REQUIRE_FALSE(find_triangular_claw(circulant(10, {1, 2})).found);
}

TEST_CASE("no triangular claw forces the Helly property") {
  std::mt19937_64 rng(7007);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 7;
    const Graph g = random_graph(n, 0.25 + 0.1 * (trial % 6), rng);
    const TriangularClaw claw = find_triangular_claw(g);
    const CliqueHellyVerdict helly = clique_helly_analysis(g);
    if (!claw.found) REQUIRE(helly.clique_helly);
    if (!helly.clique_helly) REQUIRE(claw.found);
    if (claw.found) {
      // The reported pattern really is one: corners form a triangle, each
      // tip sees exactly the two corners it should.
      const auto t = claw.triangle.to_vector();
      const auto s = claw.tips.to_vector();
      REQUIRE(t.size() == 3);
      REQUIRE(s.size() == 3);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) REQUIRE(g.adjacent(t[i], t[j]));
      int matched = 0;
      for (int tip : s) {
        int misses = 0, miss_corner = -1;
        for (int corner : t)
          if (!g.adjacent(tip, corner)) {
            ++misses;
            miss_corner = corner;
          }
        REQUIRE(misses == 1);
        REQUIRE(miss_corner >= 0);
        ++matched;
      }
      REQUIRE(matched == 3);
    }
  }
}

TEST_CASE("two disjoint triangles") {
  REQUIRE_FALSE(two_disjoint_triangles(Graph::disjoint_union(cycle(5), cycle(5))).found);
  REQUIRE_FALSE(two_disjoint_triangles(complete(4)).found);
  REQUIRE_FALSE(two_disjoint_triangles(complete(5)).found);

  const DisjointTriangles k6 = two_disjoint_triangles(complete(6));
  REQUIRE(k6.found);
  REQUIRE(k6.first.bits == 0b000111ULL);
  REQUIRE(k6.second.bits == 0b111000ULL);
  REQUIRE((k6.first & k6.second).empty());

  const DisjointTriangles two_k3 =
      two_disjoint_triangles(Graph::disjoint_union(complete(3), complete(3)));
  REQUIRE(two_k3.found);
  REQUIRE(two_k3.first.bits == 0b000111ULL);
  REQUIRE(two_k3.second.bits == 0b111000ULL);

  const DisjointTriangles circ = two_disjoint_triangles(circulant(10, {1, 2}));
  REQUIRE(circ.found);
  REQUIRE((circ.first & circ.second).empty());

  std::mt19937_64 rng(7008);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(8, 0.5, rng);
    const DisjointTriangles d = two_disjoint_triangles(g);
    bool expect = false;
    for (std::uint32_t a = 0; a < (1u << 8) && !expect; ++a) {
      if (std::popcount(a) != 3 || !is_clique_set(g, a)) continue;
      for (std::uint32_t b = a + 1; b < (1u << 8); ++b)
        if (std::popcount(b) == 3 && (a & b) == 0 && is_clique_set(g, b)) {
          expect = true;
          break;
        }
    }
    REQUIRE(d.found == expect);
    if (d.found) {
      REQUIRE(is_clique_set(g, d.first.bits));
      REQUIRE(is_clique_set(g, d.second.bits));
      REQUIRE(d.first.size() == 3);
      REQUIRE(d.second.size() == 3);
      REQUIRE((d.first & d.second).empty());
    }
  }
}
