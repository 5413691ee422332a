#ifndef GAPLAB_CLAIMS_HPP
#define GAPLAB_CLAIMS_HPP

// Certificates for the small-order extremal statements. Each claim
// re-derives its evidence from censuses or pruned enumerations and records
// every fact it checked, so a verdict can be audited from the serialized
// certificate alone. A false claim yields pass=false plus a counterexample;
// exceptions are reserved for unknown ids, bad resources, and budgets.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaplab/canonical.hpp"
#include "gaplab/constructions.hpp"
#include "gaplab/enumeration.hpp"
#include "gaplab/formulas.hpp"
#include "gaplab/gap.hpp"
#include "gaplab/graph.hpp"
#include "gaplab/invariants.hpp"

namespace gaplab {

// Precomputed censuses; anything missing is rebuilt on demand, which for
// the order-10 full census takes minutes.
struct ClaimResources {
  const std::vector<CensusRow>* full_census = nullptr;
  const std::vector<CensusRow>* tfree_census = nullptr;
  CensusOptions census;
};

struct Certificate {
  std::string claim;
  bool pass = true;
  std::vector<std::string> checks;
  std::vector<std::string> witnesses;  // canonical graph6
  std::string counterexample;          // canonical graph6, empty when pass
};

inline nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["claim"] = c.claim;
  j["pass"] = c.pass;
  j["checks"] = c.checks;
  j["witnesses"] = c.witnesses;
  if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
  return j;
}

inline const std::vector<std::string>& known_claims() {
  static const std::vector<std::string> ids = {
      "unique-1-extremal",     "unique-2-extremal", "r13-unique-35-ramsey",
      "w8-triple",             "threecases-n10",    "no-gap3-through-12",
      "thm-s4-consistency"};
  return ids;
}

namespace detail {

inline void claim_check(Certificate& cert, bool ok, const std::string& fact,
                        const std::string& cex = "") {
  if (ok) {
    cert.checks.push_back(fact);
  } else {
    cert.pass = false;
    cert.checks.push_back("FAILED: " + fact);
    if (!cex.empty() && cert.counterexample.empty()) cert.counterexample = cex;
  }
}

inline void validate_rows(const std::vector<CensusRow>& rows, int need, const char* what) {
  if (static_cast<int>(rows.size()) < need)
    throw std::invalid_argument(std::string(what) + " census too shallow for this claim");
  for (int i = 0; i < need; ++i)
    if (rows[i].n != i + 1)
      throw std::invalid_argument(std::string(what) + " census rows are not ordered 1..n");
}

inline const std::vector<CensusRow>& full_rows(const ClaimResources& res, int need,
                                               std::vector<CensusRow>& local) {
  if (res.full_census) {
    validate_rows(*res.full_census, need, "full");
    return *res.full_census;
  }
  local = brute_gap_table(need, res.census);
  return local;
}

inline const std::vector<CensusRow>& tfree_rows(const ClaimResources& res, int need,
                                                std::vector<CensusRow>& local) {
  if (res.tfree_census) {
    validate_rows(*res.tfree_census, need, "triangle-free");
    return *res.tfree_census;
  }
  local = brute_gap2_table(need, res.census);
  return local;
}

inline std::vector<Graph> ramsey_good_graphs(int n, int alpha_cap, bool tfree) {
  EnumerateOptions opts;
  opts.triangle_free = tfree;
  opts.max_alpha = alpha_cap;
  std::vector<Graph> out;
  enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); }, opts);
  return out;
}

}  // namespace detail

inline Certificate verify_claim(const std::string& id, const ClaimResources& res = {}) {
  using detail::claim_check;
  Certificate cert;
  cert.claim = id;

  if (id == "unique-1-extremal") {
    std::vector<CensusRow> local;
    const auto& rows = detail::full_rows(res, 5, local);
    for (int n = 1; n <= 4; ++n)
      claim_check(cert, rows[n - 1].max_gap() == 0,
                  "all " + std::to_string(rows[n - 1].count) + " graphs of order " +
                      std::to_string(n) + " have gap 0",
                  rows[n - 1].witnesses.empty() ? "" : rows[n - 1].witnesses[0]);
    const CensusRow& r5 = rows[4];
    claim_check(cert, r5.max_gap() == 1 && r5.gap_counts[1] == 1,
                "exactly one of the 34 graphs of order 5 has gap 1");
    const bool is_c5 = r5.witnesses.size() == 1 &&
                       isomorphic(decode_graph6(r5.witnesses[0]), named_graph("C5"));
    claim_check(cert, is_c5, "the order-5 gap-1 graph is the pentagon",
                r5.witnesses.empty() ? "" : r5.witnesses[0]);
    if (is_c5) cert.witnesses.push_back(r5.witnesses[0]);
    return cert;
  }

  if (id == "unique-2-extremal") {
    std::vector<CensusRow> local_full, local_tf;
    const auto& rows = detail::full_rows(res, 10, local_full);
    for (int n = 1; n <= 9; ++n)
      claim_check(cert, rows[n - 1].max_gap() <= 1,
                  "no graph of order " + std::to_string(n) + " has gap 2",
                  rows[n - 1].max_gap() <= 1 ? "" : rows[n - 1].witnesses[0]);
    const CensusRow& r10 = rows[9];
    claim_check(cert, r10.max_gap() == 2 && r10.gap_counts[2] == 1,
                "exactly one of the 12005168 graphs of order 10 has gap 2");
    const bool is_2c5 = r10.witnesses.size() == 1 &&
                        isomorphic(decode_graph6(r10.witnesses[0]), named_graph("2C5"));
    claim_check(cert, is_2c5, "the order-10 gap-2 graph is the disjoint pentagon pair",
                r10.witnesses.empty() ? "" : r10.witnesses[0]);
    if (is_2c5) cert.witnesses.push_back(r10.witnesses[0]);
    const auto& tf = detail::tfree_rows(res, 10, local_tf);
    claim_check(cert, tf[9].max_gap() == 2,
                "the triangle-free census reaches gap 2 at order 10 as well");
    return cert;
  }

  if (id == "r13-unique-35-ramsey") {
    const std::vector<Graph> found = detail::ramsey_good_graphs(13, 4, true);
    claim_check(cert, found.size() == 1,
                "exactly one triangle-free graph on 13 vertices has stability at most 4");
    if (found.size() == 1) {
      const Graph& g = found[0];
      claim_check(cert, stable_set_number(g) == 4, "its stability number is exactly 4");
      claim_check(cert, isomorphic(g, named_graph("R13")),
                  "it is the cyclic graph on 13 vertices with connections 1 and 5",
                  canonical_form(g).graph6());
      claim_check(cert, gap(g) == 3, "its covering gap is 3");
      cert.witnesses.push_back(canonical_form(g).graph6());
    }
    return cert;
  }

  if (id == "w8-triple") {
    const std::vector<Graph> at5 = detail::ramsey_good_graphs(5, 2, true);
    claim_check(cert, at5.size() == 1 && isomorphic(at5[0], named_graph("C5")),
                "the pentagon is the only triangle-free graph on 5 vertices with "
                "stability at most 2");
    const std::vector<Graph> at8 = detail::ramsey_good_graphs(8, 3, true);
    claim_check(cert, at8.size() == 3,
                "exactly three triangle-free graphs on 8 vertices have stability at most 3");
    const char* names[] = {"W8", "W81", "W82"};
    for (const char* name : names) {
      const Graph target = named_graph(name);
      int hits = 0;
      for (const Graph& g : at8)
        if (isomorphic(g, target)) ++hits;
      claim_check(cert, hits == 1,
                  std::string("one of them is the named graph ") + name);
    }
    for (const Graph& g : at8) cert.witnesses.push_back(canonical_form(g).graph6());
    return cert;
  }

  if (id == "threecases-n10") {
    // Graphs with a K4 or a 4-stable set satisfy the statement outright, so
    // only the hereditary family with clique and stability both at most 3
    // needs the disjoint-triangle search.
    EnumerateOptions opts;
    opts.max_alpha = 3;
    opts.keep = [](const Graph& g) { return clique_number(g) <= 3; };
    std::uint64_t checked = 0;
    std::string bad;
    enumerate_graphs(10,
                     [&](const Graph& g) {
                       ++checked;
                       if (bad.empty() && !two_disjoint_triangles(g).found)
                         bad = canonical_form(g).graph6();
                     },
                     opts);
    claim_check(cert, bad.empty(),
                "all " + std::to_string(checked) +
                    " graphs of order 10 with clique number at most 3 and stability at "
                    "most 3 contain two vertex-disjoint triangles",
                bad);
    cert.checks.push_back(
        "every other graph of order 10 has a K4 or a 4-element stable set by definition");
    return cert;
  }

  if (id == "no-gap3-through-12") {
    std::vector<CensusRow> local_full, local_tf;
    const auto& rows = detail::full_rows(res, 10, local_full);
    for (int n = 1; n <= 10; ++n)
      claim_check(cert, rows[n - 1].max_gap() <= 2,
                  "no graph of order " + std::to_string(n) + " has gap 3 (exhaustive)",
                  rows[n - 1].max_gap() <= 2 ? "" : rows[n - 1].witnesses[0]);
    claim_check(cert, rows[7].max_gap() == 1 && rows[8].max_gap() == 1,
                "the census maximum gap at orders 8 and 9 is 1");
    const auto& tf = detail::tfree_rows(res, 12, local_tf);
    for (int n = 11; n <= 12; ++n)
      claim_check(cert, tf[n - 1].max_gap() == 2,
                  "no triangle-free graph of order " + std::to_string(n) +
                      " has gap 3 (exhaustive)",
                  tf[n - 1].max_gap() <= 2 ? "" : tf[n - 1].witnesses[0]);
    cert.checks.push_back(
        "a gap-3 graph of order 11 or 12 containing a triangle would leave, after "
        "deleting that triangle, a graph of order at most 9 with gap at least 2, "
        "since removing a clique lowers the gap by at most one; the census rules "
        "that out, and the triangle-free case is exhausted above");
    return cert;
  }

  if (id == "thm-s4-consistency") {
    const FormulaValue s4 = s_bounds(4);
    claim_check(cert, s4.value.is_exact() && *s4.value.lo == 17,
                "the smallest order forcing gap 4 is exactly 17 by the bound engine");
    const std::vector<FormulaValue> s2 = s2_sequence(4);
    claim_check(cert, s2[3].value.is_exact() && *s2[3].value.lo == 17,
                "the triangle-free threshold sequence reaches 17 at step 4");
    const FormulaValue g17 = gap2_value(17);
    claim_check(cert, g17.value.is_exact() && *g17.value.lo == 4,
                "the triangle-free gap formula gives 4 at order 17");
    const FormulaValue g16 = gap2_value(16);
    claim_check(cert, g16.value.is_exact() && *g16.value.lo == 3,
                "the triangle-free gap formula gives 3 at order 16");
    const FormulaValue gb17 = gap_bounds(17);
    claim_check(cert, gb17.value.is_exact() && *gb17.value.lo == 4,
                "the general gap bound is exactly 4 at order 17");
    const FormulaValue gb16 = gap_bounds(16);
    claim_check(cert, gb16.value.hi && *gb16.value.hi == 3,
                "the general gap bound stays below 4 at order 16");
    std::vector<CensusRow> local_tf;
    const int depth = res.tfree_census
                          ? std::min<int>(12, static_cast<int>(res.tfree_census->size()))
                          : 12;
    const auto& tf = detail::tfree_rows(res, depth, local_tf);
    bool no_gap4 = true;
    for (int n = 1; n <= depth; ++n) no_gap4 = no_gap4 && tf[n - 1].max_gap() < 4;
    claim_check(cert, no_gap4,
                "no triangle-free graph of order at most " + std::to_string(depth) +
                    " reaches gap 4 (exhaustive)");
    return cert;
  }

  throw std::invalid_argument("unknown claim id: " + id);
}

}  // namespace gaplab

#endif  // GAPLAB_CLAIMS_HPP
