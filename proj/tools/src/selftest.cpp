#include "selftest.hpp"

#include "conetop/covers.hpp"
#include "conetop/economy.hpp"
#include "conetop/families.hpp"
#include "random_gen.hpp"

namespace conetop::selftest {

using gen::RandomSource;

namespace {

ComplexPtr cxp(const std::vector<Simplex>& maximal) {
  return std::make_shared<SimplicialComplex>(SimplicialComplex::from_maximal(maximal));
}

}  // namespace

SuiteResult golden_homology_suite(bool inject_fault) {
  SuiteResult r{"golden_homology"};

  auto expect = [&](const SimplicialComplex& c, const HomologyProfile& want) {
    ++r.instances;
    if (reduced_homology(c) != want) ++r.failures;
  };

  expect(SimplicialComplex(), HomologyProfile{1, {}, {}});
  expect(SimplicialComplex::from_maximal({{0}}), HomologyProfile{0, {}, {}});
  expect(SimplicialComplex::from_maximal({{0}, {1}}), HomologyProfile{0, {{0, 1}}, {}});
  // Hollow triangle: one 1-cycle.  The fault switch expects it acyclic,
  // which a working build must refuse.
  HomologyProfile circle{0, {{1, 1}}, {}};
  if (inject_fault) circle = HomologyProfile{0, {}, {}};
  expect(SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}}), circle);
  return r;
}

SuiteResult condition_equivalence_suite(RandomSource& rs, int count) {
  SuiteResult r{"condition_equivalence"};
  for (int i = 0; i < count; ++i) {
    ++r.instances;
    auto f = gen::random_subcomplex_family(rs);
    int k = int(rs.range(0, 3));
    if (!condition_equivalence(f, k).agree) ++r.failures;
  }
  return r;
}

SuiteResult duality_suite(RandomSource& rs, int count) {
  SuiteResult r{"union_intersection_duality"};
  long attempts = 0;
  while (r.instances < count && attempts < 200000) {
    ++attempts;
    // Full subcomplexes of a simplex sharing a vertex most of the time:
    // the duality hypothesis (acyclic small intersections) is then live.
    long nv = rs.range(3, 6);
    Simplex top;
    for (Vertex v = 0; v < Vertex(nv); ++v) top.push_back(v);
    ComplexPtr ambient = cxp({top});

    long k = rs.range(2, 4);
    std::vector<std::string> labels;
    std::vector<Subcomplex> members;
    for (long i = 0; i < k; ++i) {
      std::vector<Vertex> w;
      for (Vertex v = 0; v < Vertex(nv); ++v)
        if ((v == 0 && rs.chance(3, 4)) || (v != 0 && rs.chance(1, 2))) w.push_back(v);
      labels.push_back("m" + std::to_string(i + 1));
      members.push_back(full_subcomplex(ambient, w));
    }
    auto f = IndexedFamily::from_subcomplexes(ambient, std::move(labels), std::move(members));

    ThetaSet theta;
    for (size_t p = 0; p < f.size(); ++p) theta.push_back(p);
    auto rep = verify_duality(f, theta);
    if (!rep.hypothesis_met) continue;
    ++r.instances;
    if (!rep.shift_matches || !*rep.shift_matches) ++r.failures;
  }
  if (r.instances < count) ++r.failures;  // generator starved, treat as failure
  return r;
}

SuiteResult cone_criterion_suite(RandomSource& rs, int count) {
  SuiteResult r{"cone_intersection_criterion"};
  for (int i = 0; i < count; ++i) {
    ++r.instances;
    auto f = gen::random_cone_family(rs);
    try {
      if (!nonempty_intersection_criterion(f).agree) ++r.failures;
    } catch (const inconsistency_error&) {
      ++r.failures;
    }
  }
  return r;
}

SuiteResult helly_suite(RandomSource& rs, int count) {
  SuiteResult r{"helly_property"};
  for (int i = 0; i < count; ++i) {
    ++r.instances;
    auto f = gen::random_polytope_family(rs);
    try {
      auto rep = helly_check(f);
      if (rep.hypothesis_met &&
          !(rep.total_nonempty && *rep.total_nonempty && rep.point_witness))
        ++r.failures;
    } catch (const inconsistency_error&) {
      ++r.failures;
    }
  }
  return r;
}

SuiteResult kkm_suite(RandomSource& rs, int count) {
  SuiteResult r{"kkm_nerve_identity"};
  for (int i = 0; i < count; ++i) {
    ++r.instances;
    auto rc = gen::random_regular_cover(rs);
    try {
      Simplex w = kkm_check(rc);
      bool ok = !w.empty();
      for (const auto& [alpha, set] : rc.sets) {
        (void)alpha;
        ok = ok && set.contains(w);
      }
      ok = ok && nerve_matches_complex(rc);
      if (!ok) ++r.failures;
    } catch (const inconsistency_error&) {
      ++r.failures;
    }
  }
  return r;
}

SuiteResult theorem11_suite(RandomSource& rs, int count) {
  SuiteResult r{"theorem11_equivalence"};
  for (int i = 0; i < count; ++i) {
    ++r.instances;
    auto e = gen::random_economy(rs);
    try {
      auto rep = theorem11_check(e);
      bool ok = rep.consistent;
      if (rep.verdict_a) {
        ok = ok && rep.arbitrage.witness_price.has_value();
        if (ok)
          for (const auto& [id, cone] : rep.arbitrage.per_trader_cones) {
            (void)id;
            ok = ok && cone_contains(cone, *rep.arbitrage.witness_price);
          }
      }
      if (!ok) ++r.failures;
    } catch (const inconsistency_error&) {
      ++r.failures;
    }
  }
  return r;
}

SuiteResult lp_oracle_suite(RandomSource& rs, int count) {
  SuiteResult r{"lp_feasibility_oracles"};
  for (int i = 0; i < count; ++i) {
    ++r.instances;
    auto sys = gen::random_weak_system(rs);
    auto x = feasible_weak(sys.a, sys.b);
    bool ok = x.has_value() == fourier_motzkin_feasible(sys.a, sys.b);
    if (x) ok = ok && satisfies_weak(sys.a, sys.b, *x);
    if (!ok) ++r.failures;
  }
  return r;
}

SuiteResult nerve_shortcut_suite(RandomSource& rs, int count) {
  SuiteResult r{"nerve_union_shortcut"};
  for (int i = 0; i < count; ++i) {
    ++r.instances;
    auto f = gen::random_facet_family(rs);
    ThetaSet all;
    for (size_t p = 0; p < f.size(); ++p) all.push_back(p);
    HomologyProfile direct = union_profile(f, all);
    HomologyProfile via_nerve = reduced_homology(family_nerve(f));
    if (direct != via_nerve) ++r.failures;
  }
  return r;
}

Outcome run(uint64_t seed, bool inject_fault) {
  RandomSource rs(seed);
  Outcome o;
  o.suites.push_back(golden_homology_suite(inject_fault));
  o.suites.push_back(condition_equivalence_suite(rs, 200));
  o.suites.push_back(duality_suite(rs, 100));
  o.suites.push_back(cone_criterion_suite(rs, 200));
  o.suites.push_back(helly_suite(rs, 500));
  o.suites.push_back(kkm_suite(rs, 100));
  o.suites.push_back(theorem11_suite(rs, 500));
  o.suites.push_back(lp_oracle_suite(rs, 1000));
  o.suites.push_back(nerve_shortcut_suite(rs, 100));
  return o;
}

nlohmann::json report(const Outcome& o, uint64_t seed, bool inject_fault,
                      const std::string& version) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& s : o.suites)
    suites.push_back({{"name", s.name}, {"instances", s.instances}, {"failures", s.failures}});
  // "timing" stays null so equal seeds give byte-identical documents.
  return nlohmann::json{
      {"command", "selftest"},
      {"details",
       {{"seed", seed}, {"fault_injected", inject_fault}, {"suites", std::move(suites)}}},
      {"verdict", {{"passed", o.all_passed()}}},
      {"timing", nullptr},
      {"tool", {{"name", "conetop"}, {"version", version}}}};
}

}  // namespace conetop::selftest
