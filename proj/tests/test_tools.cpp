#include <string>
#include <vector>

#include "conetop/covers.hpp"
#include "conetop/economy.hpp"
#include "conetop/errors.hpp"
#include "conetop/families.hpp"
#include "doctest.h"
#include "json_io.hpp"
#include "random_gen.hpp"

using namespace conetop;
using conetop::io::json;

TEST_CASE("rationals travel as integers or p/q strings") {
  CHECK(io::rational_from_json(json(3)) == Rat(3));
  CHECK(io::rational_from_json(json("-7/2")) == Rat(-7, 2));
  CHECK(io::rational_from_json(json("4")) == Rat(4));
  CHECK_THROWS_AS(io::rational_from_json(json(0.5)), invalid_input);
  CHECK_THROWS_AS(io::rational_from_json(json("1/0")), invalid_input);
  CHECK_THROWS_AS(io::rational_from_json(json(nullptr)), invalid_input);

  CHECK(io::rational_to_json(Rat(-7, 2)) == json("-7/2"));
  CHECK(io::rational_from_json(io::rational_to_json(Rat(22, 7))) == Rat(22, 7));
}

TEST_CASE("vectors enforce the declared dimension") {
  RatVec v = io::vector_from_json(json::array({1, "1/2", -3}), 3);
  CHECK(v == RatVec{Rat(1), Rat(1, 2), Rat(-3)});
  CHECK_THROWS_AS(io::vector_from_json(json::array({1, 2}), 3), invalid_input);
  CHECK(io::vector_from_json(io::vector_to_json(v), 3) == v);
}

TEST_CASE("complexes round-trip through JSON") {
  auto c = SimplicialComplex::from_maximal({{0, 1, 2}, {2, 3}, {4}});
  ComplexPtr back = io::complex_from_json(io::complex_to_json(c));
  CHECK(*back == c);

  // Declared vertices must cover the simplices.
  json bad{{"vertices", {0, 1}}, {"maximal_simplices", {{0, 1, 2}}}};
  CHECK_THROWS_AS(io::complex_from_json(bad), invalid_input);
}

TEST_CASE("cones round-trip and the generator form derives a dual") {
  PolyhedralCone c = make_cone(2, {{Rat(1), Rat(0)}}, {{Rat(0), Rat(1)}}, true);
  PolyhedralCone back = io::cone_from_json(io::cone_to_json(c));
  CHECK(back.dim == c.dim);
  CHECK(back.weak == c.weak);
  CHECK(back.strict == c.strict);
  CHECK(back.exclude_origin == c.exclude_origin);

  json gen{{"dim", 2}, {"generators", {{1, 0}, {1, 1}}}, {"derive", "strict_dual"}};
  PolyhedralCone dual = io::cone_from_json(gen);
  // Prices strictly positive on the sector between (1,0) and (1,1).
  CHECK(cone_contains(dual, {Rat(1), Rat(0)}));
  CHECK_FALSE(cone_contains(dual, {Rat(-1), Rat(0)}));

  json no_derive{{"dim", 2}, {"generators", {{1, 0}}}};
  CHECK_THROWS_AS(io::cone_from_json(no_derive), invalid_input);
}

TEST_CASE("family JSON picks the backend from the ambient form") {
  json cones{{"ambient", {{"dimension", 2}}},
             {"members",
              {{"up", {{"dim", 2}, {"strict", {{0, 1}}}}},
               {"right", {{"dim", 2}, {"strict", {{1, 0}}}}}}}};
  IndexedFamily cf = io::family_from_json(cones, 16);
  CHECK(cf.cone_backend());
  CHECK(cf.size() == 2);
  CHECK(cf.labels() == std::vector<std::string>{"right", "up"});  // object order is sorted

  json subs{{"ambient", {{"vertices", {0, 1, 2}}, {"maximal_simplices", {{0, 1, 2}}}}},
            {"members", {{"a", {{0, 1}}}, {"b", {{1, 2}}}}}};
  IndexedFamily sf = io::family_from_json(subs, 16);
  CHECK_FALSE(sf.cone_backend());
  CHECK(sf.subcomplex_member(0).contains({0, 1}));

  // A cone member may not omit its dimension when it disagrees.
  json clash{{"ambient", {{"dimension", 2}}},
             {"members", {{"x", {{"dim", 3}, {"strict", {{1, 0, 0}}}}}}}};
  CHECK_THROWS_AS(io::family_from_json(clash, 16), invalid_input);
}

TEST_CASE("cover JSON separates the closed and star forms") {
  json closed{{"complex", {{"vertices", {0, 1}}, {"maximal_simplices", {{0, 1}}}}},
              {"subdivision_level", 0},
              {"sets", {{"0", {{"simplices", {{0, 1}}}}}, {"1", {{"simplices", {{1}}}}}}}};
  io::LoadedCover lc = io::cover_from_json(closed, 16);
  REQUIRE(lc.regular.has_value());
  CHECK_FALSE(lc.simple.has_value());
  CHECK(is_regular_cover(*lc.regular).regular);

  json stars{{"complex", {{"vertices", {0, 1}}, {"maximal_simplices", {{0, 1}}}}},
             {"subdivision_level", 2},
             {"sets",
              {{"0", {{"star_vertices", json::array()}}}, {"1", {{"star_vertices", json::array()}}}}}};
  // Empty star sets fail cover validation, not schema parsing.
  CHECK_THROWS_AS(io::cover_from_json(stars, 16), invalid_input);

  json mixed{{"complex", {{"vertices", {0, 1}}, {"maximal_simplices", {{0, 1}}}}},
             {"subdivision_level", 0},
             {"sets", {{"0", {{"simplices", {{0}}}}}, {"1", {{"star_vertices", {1}}}}}}};
  CHECK_THROWS_AS(io::cover_from_json(mixed, 16), invalid_input);

  json deep{{"complex", {{"vertices", {0}}, {"maximal_simplices", json::array()}}},
            {"subdivision_level", 4},
            {"sets", {{"0", {{"simplices", {{0}}}}}}}};
  CHECK_THROWS_AS(io::cover_from_json(deep, 16), invalid_input);
}

TEST_CASE("economy JSON demands exactly one utility form") {
  json econ{{"n", 2},
            {"traders",
             {{{"id", "a"}, {"endowment", {1, 1}}, {"utility", {{"linear", {1, 2}}}}},
              {{"id", "b"},
               {"endowment", {2, 1}},
               {"utility", {{"min_linear", {{1, 0}, {1, 1}}}}}}}}};
  Economy e = io::economy_from_json(econ, 16);
  CHECK(e.n == 2);
  CHECK(e.traders.size() == 2);
  CHECK(e.traders[1].id == "b");
  CHECK(std::holds_alternative<MinLinearUtility>(e.traders[1].utility));

  Economy back = io::economy_from_json(io::economy_to_json(e), 16);
  CHECK(back.traders[0].id == e.traders[0].id);
  CHECK(back.traders[1].utility.index() == e.traders[1].utility.index());

  json twice = econ;
  twice["traders"][0]["utility"]["cone_generators"] = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(io::economy_from_json(twice, 16), invalid_input);

  json empty_utility = econ;
  empty_utility["traders"][0]["utility"] = json::object();
  CHECK_THROWS_AS(io::economy_from_json(empty_utility, 16), invalid_input);
}

TEST_CASE("homology profiles serialize with string keys and factors") {
  HomologyProfile p{0, {{1, 2}}, {{1, {Int(3)}}}};
  json j = io::profile_to_json(p);
  CHECK(j["minus_one_rank"] == 0);
  CHECK(j["betti"]["1"] == 2);
  CHECK(j["torsion"]["1"] == json::array({"3"}));
  CHECK(j["acyclic"] == false);
}

TEST_CASE("random source is reproducible and in range") {
  gen::RandomSource a(99), b(99);
  for (int i = 0; i < 200; ++i) {
    long x = a.range(-5, 17);
    CHECK(x == b.range(-5, 17));
    CHECK(x >= -5);
    CHECK(x <= 17);
  }
}

TEST_CASE("generated instances satisfy their own contracts") {
  gen::RandomSource rs(4242);
  for (int i = 0; i < 10; ++i) {
    RegularCover rc = gen::random_regular_cover(rs);
    CHECK(is_regular_cover(rc).regular);
  }
  for (int i = 0; i < 10; ++i) {
    Economy e = gen::random_economy(rs);
    CHECK(e.n >= 2);
    CHECK(e.n <= 3);
    CHECK(e.traders.size() >= 2);
    CHECK(e.traders.size() <= 6);
    for (const auto& t : e.traders) CHECK_NOTHROW(market_cone(t, e.n));
  }
  for (int i = 0; i < 10; ++i) {
    IndexedFamily f = gen::random_facet_family(rs);
    CHECK_FALSE(f.cone_backend());
    CHECK(f.size() >= 1);
  }
}
