#include <doctest.h>

#include <random>

#include "conetop/economy.hpp"
#include "conetop/matrix.hpp"

using namespace conetop;

namespace {

RatVec qv(std::vector<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Trader linear(std::string id, std::vector<long> omega, std::vector<long> a) {
  return Trader{std::move(id), qv(std::move(omega)), LinearUtility{qv(std::move(a))}};
}

Trader min_linear(std::string id, std::vector<long> omega, std::vector<std::vector<long>> rows) {
  MinLinearUtility u;
  for (auto& r : rows) u.rows.push_back(qv(std::move(r)));
  return Trader{std::move(id), qv(std::move(omega)), std::move(u)};
}

Trader explicit_cone(std::string id, std::vector<long> omega,
                     std::vector<std::vector<long>> gens) {
  std::vector<RatVec> g;
  for (auto& r : gens) g.push_back(qv(std::move(r)));
  const int dim = int(g[0].size());
  return Trader{std::move(id), qv(std::move(omega)),
                ExplicitConeUtility{make_generators(dim, std::move(g))}};
}

// Three pointed sectors in the plane that intersect pairwise but have no
// common direction.  Each trader supplies the generators of the closure of
// its preferred-direction cone; the market cones come out as the sectors
// spanned by (1,0),(-1,1) / (-1,2),(-1,-3) / (-2,-5),(6,1).
Economy three_sector_economy() {
  return make_economy(2, {explicit_cone("t1", {1, 1}, {{0, 1}, {1, 1}}),
                          explicit_cone("t2", {1, 2}, {{-3, 1}, {-2, -1}}),
                          explicit_cone("t3", {2, 1}, {{1, -6}, {5, -2}})});
}

bool same_cone(const PolyhedralCone& a, const PolyhedralCone& b) {
  return a.dim == b.dim && a.weak == b.weak && a.strict == b.strict &&
         a.exclude_origin == b.exclude_origin;
}

}  // namespace

TEST_CASE("economy construction validates") {
  Trader ok = linear("a", {1, 1}, {1, 0});
  Trader ok2 = linear("b", {1, 2}, {0, 1});

  CHECK_NOTHROW(make_economy(2, {ok, ok2}));
  CHECK_THROWS_AS(make_economy(1, {ok, ok2}), invalid_input);
  CHECK_THROWS_AS(make_economy(2, {ok}), invalid_input);
  CHECK_THROWS_AS(make_economy(2, {}), invalid_input);
  CHECK_THROWS_AS(make_economy(2, {ok, ok}), invalid_input);  // duplicate id

  CHECK_THROWS_AS(make_economy(2, {linear("", {1, 1}, {1, 0}), ok2}), invalid_input);
  CHECK_THROWS_AS(make_economy(2, {linear("a", {0, 0}, {1, 0}), ok2}), invalid_input);
  CHECK_THROWS_AS(make_economy(2, {linear("a", {1}, {1, 0}), ok2}), invalid_input);
  CHECK_THROWS_AS(make_economy(2, {linear("a", {1, 1}, {0, 0}), ok2}), invalid_input);
  CHECK_THROWS_AS(make_economy(2, {min_linear("a", {1, 1}, {}), ok2}), invalid_input);
  CHECK_THROWS_AS(make_economy(2, {min_linear("a", {1, 1}, {{1, 0}, {0, 0}}), ok2}),
                  invalid_input);
  CHECK_THROWS_AS(make_economy(3, {ok, ok2}), invalid_input);  // dimension mismatch
  CHECK_THROWS_AS(make_economy(2, {explicit_cone("a", {1, 1}, {{1, 0, 0}}), ok2}),
                  invalid_input);
}

TEST_CASE("asymptotic cones of the supported utility forms") {
  // Linear utility: the open half-space of strictly improving directions.
  auto half = asymptotic_cone(linear("a", {1, 1}, {1, 1}), 2);
  CHECK(half.weak.empty());
  CHECK(half.strict == std::vector<RatVec>{qv({1, 1})});
  CHECK(!half.exclude_origin);
  CHECK(cone_contains(half, qv({1, 0})));
  CHECK(!cone_contains(half, qv({1, -1})));
  CHECK(!cone_contains(half, qv({0, 0})));

  // The endowment plays no role.
  auto other = asymptotic_cone(linear("a", {-3, 7}, {1, 1}), 2);
  CHECK(same_cone(half, other));

  // Min of linear pieces climbs exactly where every piece climbs.
  auto quad = asymptotic_cone(min_linear("a", {1, 1}, {{1, 0}, {0, 1}}), 2);
  CHECK(cone_contains(quad, qv({1, 1})));
  CHECK(!cone_contains(quad, qv({1, 0})));  // boundary piece stays flat
  CHECK(!cone_contains(quad, qv({0, 0})));

  // Opposing pieces bound the utility: no polyhedral direction set.
  CHECK_THROWS_WITH_AS(asymptotic_cone(min_linear("a", {1, 1}, {{1, 0}, {-1, 0}}), 2),
                       "bounded-type utility unsupported", invalid_input);

  // Explicit closure: the interior of the given cone.
  auto inner = asymptotic_cone(explicit_cone("a", {1, 1}, {{1, 0}, {0, 1}}), 2);
  CHECK(cone_contains(inner, qv({1, 1})));
  CHECK(!cone_contains(inner, qv({1, 0})));

  // A non-solid closure has empty interior and is rejected.
  CHECK_THROWS_AS(asymptotic_cone(explicit_cone("a", {1, 1}, {{1, 1}}), 2), invalid_input);

  // Spanning generators give the whole space: no facets at all.
  auto whole = asymptotic_cone(explicit_cone("a", {1, 1}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), 2);
  CHECK(whole.strict.empty());
  CHECK(cone_contains(whole, qv({-5, 3})));
  CHECK(cone_contains(whole, qv({0, 0})));
}

TEST_CASE("market cones are closed duals minus the origin") {
  // Half-space utility prices to a single ray.
  auto ray = market_cone(linear("a", {1, 1}, {1, 0}), 2);
  CHECK(ray.strict.empty());
  CHECK(ray.exclude_origin);
  CHECK(cone_contains(ray, qv({1, 0})));
  CHECK(cone_contains(ray, qv({3, 0})));
  CHECK(!cone_contains(ray, qv({0, 1})));
  CHECK(!cone_contains(ray, qv({-1, 0})));
  CHECK(!cone_contains(ray, qv({0, 0})));

  // The orthant is self-dual; the boundary prices stay in.
  auto quad = market_cone(min_linear("a", {1, 1}, {{1, 0}, {0, 1}}), 2);
  CHECK(cone_contains(quad, qv({1, 0})));
  CHECK(cone_contains(quad, qv({0, 1})));
  CHECK(cone_contains(quad, qv({2, 3})));
  CHECK(!cone_contains(quad, qv({0, 0})));
  CHECK(!cone_contains(quad, qv({-1, 0})));

  // Identical traders price identically regardless of endowments.
  CHECK(same_cone(market_cone(linear("a", {5, 1}, {1, 2}), 2),
                  market_cone(linear("b", {1, 9}, {1, 2}), 2)));

  // Sector trader from the three-sector fixture.
  auto sector = market_cone(explicit_cone("t2", {1, 2}, {{-3, 1}, {-2, -1}}), 2);
  CHECK(cone_contains(sector, qv({-1, 2})));
  CHECK(cone_contains(sector, qv({-1, -1})));
  CHECK(!cone_contains(sector, qv({1, 0})));
}

TEST_CASE("limited arbitrage") {
  // Two transverse rays never share a price.
  auto crossing = make_economy(2, {linear("a", {1, 1}, {1, 0}), linear("b", {1, 2}, {0, 1})});
  auto rep = limited_arbitrage(crossing);
  CHECK(!rep.holds);
  CHECK(!rep.witness_price.has_value());
  CHECK(rep.per_trader_cones.size() == 2);
  CHECK(rep.per_trader_cones.count("a") == 1);
  CHECK(rep.per_trader_cones.count("b") == 1);
  CHECK(!equilibrium_exists(crossing));

  // Identical traders share their whole cone.
  auto twins = make_economy(2, {linear("a", {1, 1}, {1, 0}), linear("b", {1, 2}, {1, 0})});
  auto twin_rep = limited_arbitrage(twins);
  REQUIRE(twin_rep.holds);
  REQUIRE(twin_rep.witness_price.has_value());
  for (const auto& [id, cone] : twin_rep.per_trader_cones)
    CHECK(cone_contains(cone, *twin_rep.witness_price));
  CHECK(equilibrium_exists(twins));

  // Ray inside the quadrant: the common price lies on the ray through (1,0).
  auto mixed = make_economy(
      2, {linear("a", {1, 1}, {1, 0}), min_linear("b", {1, 2}, {{1, 0}, {0, 1}})});
  auto mixed_rep = limited_arbitrage(mixed);
  REQUIRE(mixed_rep.holds);
  REQUIRE(mixed_rep.witness_price.has_value());
  CHECK((*mixed_rep.witness_price)[1] == 0);
  CHECK((*mixed_rep.witness_price)[0] >= 1);
  // Deterministic: the same call returns the same witness.
  CHECK(*limited_arbitrage(mixed).witness_price == *mixed_rep.witness_price);

  // The reported cones are the market cones themselves.
  CHECK(same_cone(mixed_rep.per_trader_cones.at("a"), market_cone(mixed.traders[0], 2)));
}

TEST_CASE("limited diversity") {
  auto twins = make_economy(2, {linear("a", {1, 1}, {1, 0}), linear("b", {1, 2}, {1, 0})});
  auto rep = limited_diversity(twins);
  CHECK(rep.holds);
  CHECK(!rep.witness_theta.has_value());
  CHECK(rep.union_profiles.size() == 3);
  for (const auto& [theta, prof] : rep.union_profiles) CHECK(prof.is_acyclic());
  CHECK(social_choice_exists(twins));

  // Pairwise-meeting sectors with no common direction: the full coalition's
  // nerve is a hollow triangle.
  auto sectors = three_sector_economy();
  auto srep = limited_diversity(sectors);
  CHECK(!srep.holds);
  REQUIRE(srep.witness_theta.has_value());
  CHECK(*srep.witness_theta == ThetaSet{0, 1, 2});
  CHECK(srep.union_profiles.size() == 7);
  CHECK(srep.union_profiles.at({0, 1, 2}).betti_at(1) == 1);
  CHECK(srep.union_profiles.at({0, 1}).is_acyclic());
  CHECK(srep.union_profiles.at({0, 2}).is_acyclic());
  CHECK(srep.union_profiles.at({1, 2}).is_acyclic());
  CHECK(!social_choice_exists(sectors));
  CHECK(social_choice_exists(sectors, {0, 1}));
  CHECK(!social_choice_exists(sectors, {0, 1, 2}));

  // Opposite quadrants: the pair union falls apart into two components.
  auto split = make_economy(2, {min_linear("a", {1, 1}, {{1, 0}, {0, 1}}),
                                min_linear("b", {1, 2}, {{-1, 0}, {0, -1}})});
  auto prep = limited_diversity(split);
  CHECK(!prep.holds);
  CHECK(*prep.witness_theta == ThetaSet{0, 1});
  CHECK(prep.union_profiles.at({0, 1}).betti_at(0) == 1);
  CHECK(prep.union_profiles.at({0, 1}).minus_one_rank == 0);
}

TEST_CASE("subeconomy restriction") {
  auto sectors = three_sector_economy();

  auto whole = subeconomy(sectors, {0, 1, 2});
  CHECK(whole.n == sectors.n);
  CHECK(whole.traders.size() == 3);
  CHECK(whole.traders[2].id == "t3");

  auto pair = subeconomy(sectors, {0, 2});
  CHECK(pair.traders.size() == 2);
  CHECK(pair.traders[0].id == "t1");
  CHECK(pair.traders[1].id == "t3");

  // Single-trader restriction: arbitrage reduces to cone nonemptiness.
  auto solo = subeconomy(sectors, {1});
  CHECK(solo.traders.size() == 1);
  CHECK(limited_arbitrage(solo).holds);

  // A trader indifferent to direction has an empty market cone.
  auto saturated = make_economy(
      2, {explicit_cone("w", {1, 1}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}),
          linear("a", {1, 2}, {1, 0})});
  CHECK(!limited_arbitrage(subeconomy(saturated, {0})).holds);
  CHECK(limited_arbitrage(subeconomy(saturated, {1})).holds);

  CHECK_THROWS_AS(subeconomy(sectors, {}), invalid_input);
  CHECK_THROWS_AS(subeconomy(sectors, {3}), invalid_input);
  CHECK_THROWS_AS(subeconomy(sectors, {1, 0}), invalid_input);
  CHECK_THROWS_AS(subeconomy(sectors, {1, 1}), invalid_input);
}

TEST_CASE("four-way equivalence on fixed economies") {
  // Identical traders: everything holds.
  auto twins = make_economy(2, {linear("a", {1, 1}, {1, 0}), linear("b", {1, 2}, {1, 0})});
  auto t = theorem11_check(twins, true);
  CHECK(t.verdict_a);
  CHECK(t.verdict_b);
  CHECK(t.verdict_c);
  CHECK(t.verdict_d);
  CHECK(t.consistent);
  CHECK(t.subeconomy_la.size() == 3);

  // Transverse rays: everything fails, and the failure sits in the pair.
  auto crossing = make_economy(2, {linear("a", {1, 1}, {1, 0}), linear("b", {1, 2}, {0, 1})});
  auto c = theorem11_check(crossing, true);
  CHECK(!c.verdict_a);
  CHECK(!c.verdict_b);
  CHECK(!c.verdict_c);
  CHECK(!c.verdict_d);
  CHECK(c.consistent);
  CHECK(c.subeconomy_la.at({0}));
  CHECK(c.subeconomy_la.at({1}));
  CHECK(!c.subeconomy_la.at({0, 1}));
  CHECK(*c.diversity.witness_theta == ThetaSet{0, 1});

  // Three sectors: every pair clears, only the triple fails.
  auto s = theorem11_check(three_sector_economy(), true);
  CHECK(!s.verdict_a);
  CHECK(!s.verdict_b);
  CHECK(!s.verdict_c);
  CHECK(!s.verdict_d);
  CHECK(s.consistent);
  CHECK(s.subeconomy_la.at({0, 1}));
  CHECK(s.subeconomy_la.at({0, 2}));
  CHECK(s.subeconomy_la.at({1, 2}));
  CHECK(!s.subeconomy_la.at({0, 1, 2}));

  // Mixed ray and quadrant: compatible tastes.
  auto mixed = make_economy(
      2, {linear("a", {1, 1}, {1, 0}), min_linear("b", {1, 2}, {{1, 0}, {0, 1}})});
  auto m = theorem11_check(mixed, true);
  CHECK(m.verdict_a);
  CHECK(m.consistent);

  // Relabeling traders moves no verdict.
  auto sectors = three_sector_economy();
  std::reverse(sectors.traders.begin(), sectors.traders.end());
  auto r = theorem11_check(sectors, true);
  CHECK(r.verdict_a == s.verdict_a);
  CHECK(r.verdict_b == s.verdict_b);
  CHECK(r.verdict_c == s.verdict_c);
  CHECK(r.verdict_d == s.verdict_d);
}

TEST_CASE("coalition guard") {
  auto sectors = three_sector_economy();
  sectors.max_index_set = 2;
  CHECK_THROWS_AS(limited_diversity(sectors), guard_exceeded);
  CHECK_THROWS_AS(theorem11_check(sectors), guard_exceeded);
  CHECK(!limited_arbitrage(sectors).holds);  // no enumeration, unaffected
}

TEST_CASE("randomized four-way equivalence") {
  std::mt19937_64 eng(20260814);
  auto rnd = [&](long lo, long hi) { return long(lo + long(eng() % uint64_t(hi - lo + 1))); };

  auto rvec = [&](int n) {
    for (;;) {
      std::vector<long> xs;
      bool nonzero = false;
      for (int j = 0; j < n; ++j) {
        xs.push_back(rnd(-2, 2));
        nonzero = nonzero || xs.back() != 0;
      }
      if (nonzero) return qv(xs);
    }
  };

  auto random_utility = [&](int n) -> Utility {
    for (;;) {
      long kind = rnd(0, 2);
      if (kind == 0) return LinearUtility{rvec(n)};
      if (kind == 1) {
        std::vector<RatVec> rows;
        long m = rnd(1, 3);
        for (long i = 0; i < m; ++i) rows.push_back(rvec(n));
        if (cone_nonempty(make_cone(n, {}, rows))) return MinLinearUtility{std::move(rows)};
        continue;  // bounded-type, resample
      }
      std::vector<RatVec> rows;
      long m = rnd(0, 2);
      for (long i = 0; i < m; ++i) rows.push_back(rvec(n));
      auto gens = cone_generators(n, rows);
      if (gens.generators.empty()) continue;  // degenerate to the origin
      RatMatrix g(int(gens.generators.size()), n);
      for (size_t i = 0; i < gens.generators.size(); ++i)
        for (int j = 0; j < n; ++j) g.at(int(i), j) = gens.generators[i][size_t(j)];
      if (rat_rank(g) != n) continue;  // interior would be empty
      return ExplicitConeUtility{std::move(gens)};
    }
  };

  int held = 0;
  for (int round = 0; round < 60; ++round) {
    int n = int(rnd(2, 3));
    int h = int(rnd(2, 5));
    std::vector<Trader> traders;
    for (int i = 0; i < h; ++i)
      traders.push_back(Trader{"t" + std::to_string(i + 1), rvec(n), random_utility(n)});
    auto e = make_economy(n, std::move(traders));

    auto rep = theorem11_check(e, /*self_test_mode=*/true);
    CHECK(rep.consistent);
    held += rep.verdict_a ? 1 : 0;

    if (round % 5 == 0) {
      std::reverse(e.traders.begin(), e.traders.end());
      auto rev = theorem11_check(e, true);
      CHECK(rev.verdict_a == rep.verdict_a);
      CHECK(rev.verdict_d == rep.verdict_d);
    }
  }
  // The sample must exercise both outcomes.
  CHECK(held > 0);
  CHECK(held < 60);
}
