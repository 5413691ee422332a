#include <algorithm>
#include <string>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "gaplab/claims.hpp"
#include "gaplab/constructions.hpp"
#include "gaplab/enumeration.hpp"
#include "support/util.hpp"

using namespace gaplab;
using namespace gaplab::testutil;

TEST_CASE("claim registry", "[claims]") {
  const auto& ids = known_claims();
  CHECK(ids.size() == 7);
  CHECK(std::find(ids.begin(), ids.end(), "unique-1-extremal") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "no-gap3-through-12") != ids.end());
  CHECK_THROWS_AS(verify_claim("no-such-claim"), std::invalid_argument);
}

TEST_CASE("pentagon uniqueness certificate", "[claims]") {
  const Certificate cert = verify_claim("unique-1-extremal");
  CHECK(cert.pass);
  CHECK(cert.claim == "unique-1-extremal");
  CHECK(cert.checks.size() == 6);
  REQUIRE(cert.witnesses.size() == 1);
  CHECK(isomorphic(decode_graph6(cert.witnesses[0]), cycle(5)));
  CHECK(cert.counterexample.empty());

  const nlohmann::json j = to_json(cert);
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() == 6);
  CHECK_FALSE(j.contains("counterexample"));
}

TEST_CASE("Ramsey graph uniqueness certificates", "[claims]") {
  const Certificate r13 = verify_claim("r13-unique-35-ramsey");
  CHECK(r13.pass);
  REQUIRE(r13.witnesses.size() == 1);
  CHECK(isomorphic(decode_graph6(r13.witnesses[0]), named_graph("R13")));

  const Certificate w8 = verify_claim("w8-triple");
  CHECK(w8.pass);
  CHECK(w8.witnesses.size() == 3);
}

TEST_CASE("disjoint triangle case analysis at order 10", "[claims]") {
  const Certificate cert = verify_claim("threecases-n10");
  CHECK(cert.pass);
  CHECK(cert.counterexample.empty());
}

TEST_CASE("threshold consistency certificate", "[claims]") {
  // A shallow triangle-free census keeps this variant fast; the full-depth
  // run lives in the heavy suite.
  const std::vector<CensusRow> tf = brute_gap2_table(10);
  ClaimResources res;
  res.tfree_census = &tf;
  const Certificate cert = verify_claim("thm-s4-consistency", res);
  CHECK(cert.pass);
  const std::string& last = cert.checks.back();
  CHECK(last.find("order at most 10") != std::string::npos);
}

TEST_CASE("claims fail honestly on doctored evidence", "[claims]") {
  std::vector<CensusRow> rows = brute_gap_table(5);

  SECTION("miscounted extremal class") {
    rows[4].gap_counts[1] = 2;
    ClaimResources res;
    res.full_census = &rows;
    const Certificate cert = verify_claim("unique-1-extremal", res);
    CHECK_FALSE(cert.pass);
    CHECK(std::any_of(cert.checks.begin(), cert.checks.end(), [](const std::string& s) {
      return s.rfind("FAILED:", 0) == 0;
    }));
  }

  SECTION("wrong witness graph") {
    rows[4].witnesses[0] = canonical_form(complete(5)).graph6();
    ClaimResources res;
    res.full_census = &rows;
    const Certificate cert = verify_claim("unique-1-extremal", res);
    CHECK_FALSE(cert.pass);
    CHECK(cert.counterexample == canonical_form(complete(5)).graph6());
    const nlohmann::json j = to_json(cert);
    CHECK(j.contains("counterexample"));
  }

  SECTION("malformed resources") {
    std::vector<CensusRow> shallow(rows.begin(), rows.begin() + 3);
    ClaimResources res;
    res.full_census = &shallow;
    CHECK_THROWS_AS(verify_claim("unique-1-extremal", res), std::invalid_argument);

    std::vector<CensusRow> shuffled = rows;
    std::swap(shuffled[0], shuffled[1]);
    res.full_census = &shuffled;
    CHECK_THROWS_AS(verify_claim("unique-1-extremal", res), std::invalid_argument);
  }
}

// The census-backed claims need the order-10 full census and the order-12
// triangle-free census; they run as their own ctest entry.
TEST_CASE("census-backed extremal claims", "[.][claims-heavy]") {
  const std::vector<CensusRow> full = brute_gap_table(10);
  const std::vector<CensusRow> tf = brute_gap2_table(12);
  ClaimResources res;
  res.full_census = &full;
  res.tfree_census = &tf;

  const Certificate c2 = verify_claim("unique-2-extremal", res);
  CHECK(c2.pass);
  REQUIRE(c2.witnesses.size() == 1);
  CHECK(isomorphic(decode_graph6(c2.witnesses[0]), named_graph("2C5")));

  const Certificate c3 = verify_claim("no-gap3-through-12", res);
  CHECK(c3.pass);

  const Certificate s4 = verify_claim("thm-s4-consistency", res);
  CHECK(s4.pass);
  CHECK(s4.checks.back().find("order at most 12") != std::string::npos);
}
