// Copyright 2026 The Woodall Packer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "woodall/dicycles.hpp"
#include "woodall/error.hpp"
#include "woodall/generator.hpp"
#include "woodall/oracle.hpp"

using namespace woodall;

namespace {

Digraph ditriangle() { return make_digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

Digraph random_digraph(Rng& rng, std::size_t n, double p) {
  std::vector<Arc> arcs;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && rng.bernoulli(p)) arcs.push_back({u, v});
    }
  }
  return make_digraph(n, arcs);
}

// Largest k with a k-packing, by brute force from the girth downward.
std::size_t brute_nu(const Digraph& g) {
  for (std::size_t k = testing::brute_girth(g); k >= 2; --k) {
    if (testing::brute_has_packing(g, k)) return k;
  }
  return 1;
}

}  // namespace

TEST_CASE("is_transversal on the small examples") {
  CHECK(is_transversal(ditriangle(), std::vector<Arc>{{0, 1}}).is_transversal);

  auto none = is_transversal(ditriangle(), std::vector<Arc>{});
  CHECK_FALSE(none.is_transversal);
  REQUIRE(none.counterexample);
  CHECK(none.counterexample->nodes() == std::vector<NodeId>{0, 1, 2});

  Digraph digon = make_digraph(2, {{0, 1}, {1, 0}});
  CHECK(is_transversal(digon, std::vector<Arc>{{0, 1}}).is_transversal);

  try {
    is_transversal(ditriangle(), std::vector<Arc>{{1, 0}});
    FAIL("expected ArcNotPresent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kArcNotPresent);
  }
}

TEST_CASE("is_transversal agrees with cycle enumeration") {
  Rng rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    Digraph g = random_digraph(rng, rng.between(2, 8), 0.3);
    const auto cycles = testing::brute_dicycles(g);
    std::vector<Arc> t;
    for (const Arc& a : g.arcs()) {
      if (rng.bernoulli(0.35)) t.push_back(a);
    }
    auto check = is_transversal(g, t);
    CHECK(check.is_transversal == testing::meets_every_cycle(cycles, t));
    if (!check.is_transversal) {
      REQUIRE(check.counterexample);
      CHECK(g.contains_dicycle(*check.counterexample));
      for (const Arc& a : check.counterexample->arcs()) {
        CHECK(std::find(t.begin(), t.end(), a) == t.end());
      }
    }
  }
}

TEST_CASE("verify_packing reports") {
  Packing good{{{{0, 1}}, {{1, 2}}, {{2, 0}}}};
  auto report = verify_packing(ditriangle(), good);
  CHECK(report.verdict);
  CHECK(report.size == 3);
  CHECK(report.disjoint);
  CHECK(report.girth == Girth::finite(3));
  REQUIRE(report.per_transversal.size() == 3);
  CHECK(report.per_transversal[0].index == 1);

  auto overlap = verify_packing(ditriangle(), Packing{{{{0, 1}}, {{0, 1}}}});
  CHECK_FALSE(overlap.disjoint);
  CHECK_FALSE(overlap.verdict);

  auto missing = verify_packing(ditriangle(), Packing{{{{1, 0}}}});
  CHECK_FALSE(missing.arcs_present);
  CHECK_FALSE(missing.verdict);

  auto short_of = verify_packing(ditriangle(), Packing{{{{0, 1}}, {}}});
  CHECK_FALSE(short_of.verdict);
  REQUIRE(short_of.per_transversal[1].counterexample);

  auto json = nlohmann::json::parse(to_json(report));
  CHECK(json["verdict"] == true);
  CHECK(json["size"] == 3);
  CHECK(json["girth"] == 3);
  auto dag = nlohmann::json::parse(
      to_json(verify_packing(make_digraph(2, {{0, 1}}), Packing{})));
  CHECK(dag["girth"].is_null());
}

TEST_CASE("exact_nu on the small examples") {
  CHECK(exact_nu(ditriangle()) == 3);
  CHECK(exact_nu(make_digraph(2, {{0, 1}, {1, 0}})) == 2);
  Digraph bi = make_digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
  CHECK(exact_nu(bi) == 2);
  CHECK(brute_nu(bi) == 2);
  CHECK_THROWS_AS(exact_nu(make_digraph(2, {{0, 1}})), Error);
}

TEST_CASE("exact_nu matches brute force and never exceeds the girth") {
  Rng rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    Digraph g = random_digraph(rng, rng.between(3, 6), 0.35);
    if (g.arc_count() > 11 || is_acyclic(g).acyclic()) continue;
    const std::size_t nu = exact_nu(g);
    CHECK(nu == brute_nu(g));
    CHECK(nu <= girth(g).girth.value());
  }
}

TEST_CASE("exact_nu budget") {
  GenConfig cfg;
  cfg.n = 12;
  cfg.seed = 5;
  Digraph g = generate(cfg).digraph;
  try {
    exact_nu(g, 0);
    FAIL("expected BudgetExhausted");
  } catch (const BudgetExhausted& e) {
    CHECK(e.code() == ErrorCode::kBudgetExhausted);
    CHECK(e.lower_bound() == 2);
  }
}

TEST_CASE("check_split") {
  Packing good{{{{0, 1}}, {{1, 2}}, {{2, 0}}}};
  CHECK(check_split(ditriangle(), good).ok);
  auto bad = check_split(ditriangle(), Packing{{{{1, 2}, {0, 1}}, {{2, 0}}, {}}});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violation);
  CHECK(*bad.violation == Ditriangle{0, 1, 2});
  CHECK_THROWS_AS(check_split(ditriangle(), Packing{{{{0, 1}}}}), Error);
}
