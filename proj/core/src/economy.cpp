#include "conetop/economy.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "conetop/errors.hpp"

namespace conetop {

namespace {

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

void require_vec(const RatVec& v, int n, const char* what) {
  if (int(v.size()) != n) throw invalid_input(std::string(what) + " has the wrong dimension");
}

void validate_trader(const Trader& t, int n) {
  if (t.id.empty()) throw invalid_input("trader id must be nonempty");
  require_vec(t.endowment, n, "endowment");
  if (is_zero(t.endowment)) throw invalid_input("endowment must be nonzero");
  if (const auto* lin = std::get_if<LinearUtility>(&t.utility)) {
    require_vec(lin->a, n, "linear utility");
    if (is_zero(lin->a)) throw invalid_input("linear utility must be nonzero");
  } else if (const auto* ml = std::get_if<MinLinearUtility>(&t.utility)) {
    if (ml->rows.empty()) throw invalid_input("min-linear utility needs at least one row");
    for (const RatVec& r : ml->rows) {
      require_vec(r, n, "min-linear row");
      if (is_zero(r)) throw invalid_input("min-linear row must be nonzero");
    }
  } else {
    const auto& ec = std::get<ExplicitConeUtility>(t.utility);
    if (ec.closure.dim != n) throw invalid_input("explicit cone has the wrong dimension");
    make_generators(n, ec.closure.generators);  // row sizes, nonzero generators
  }
}

void validate_economy(const Economy& e, bool allow_single) {
  if (e.n < 2) throw invalid_input("economy needs more than one good");
  if (e.traders.empty() || (!allow_single && e.traders.size() < 2))
    throw invalid_input("economy needs more than one trader");
  std::set<std::string> seen;
  for (const Trader& t : e.traders) {
    validate_trader(t, e.n);
    if (!seen.insert(t.id).second) throw invalid_input("duplicate trader id: " + t.id);
  }
}

void coalition_guard(const Economy& e) {
  if (e.traders.size() > e.max_index_set || e.traders.size() > 24)
    throw guard_exceeded("economy has more traders than the index-set guard allows");
}

// Generators of the closure of the asymptotic cone.  The min-linear case is
// the weak version of the strict system, which is its closure exactly
// because asymptotic_cone has already checked the strict cone nonempty.
ConeGenerators closure_generators(const Trader& t, int n) {
  if (const auto* lin = std::get_if<LinearUtility>(&t.utility))
    return cone_generators(n, {lin->a});
  if (const auto* ml = std::get_if<MinLinearUtility>(&t.utility))
    return cone_generators(n, ml->rows);
  return make_generators(n, std::get<ExplicitConeUtility>(t.utility).closure.generators);
}

// Nonempty subsets of {0..h-1}, lexicographic prefix order.
template <typename F>
void foreach_theta(size_t h, F&& f) {
  ThetaSet cur;
  auto rec = [&](auto&& self, size_t next) -> void {
    for (size_t i = next; i < h; ++i) {
      cur.push_back(i);
      f(static_cast<const ThetaSet&>(cur));
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

IndexedFamily market_cone_family(const Economy& e) {
  std::vector<std::string> labels;
  std::vector<PolyhedralCone> cones;
  for (const Trader& t : e.traders) {
    labels.push_back(t.id);
    cones.push_back(market_cone(t, e.n));
  }
  FamilyOptions opt;
  opt.max_index_set = e.max_index_set;
  return IndexedFamily::from_cones(std::move(labels), std::move(cones), opt);
}

}  // namespace

Economy make_economy(int n, std::vector<Trader> traders, size_t max_index_set) {
  Economy e{n, std::move(traders), max_index_set};
  validate_economy(e, /*allow_single=*/false);
  return e;
}

PolyhedralCone asymptotic_cone(const Trader& t, int n) {
  if (n < 1) throw invalid_input("dimension must be positive");
  validate_trader(t, n);
  if (const auto* lin = std::get_if<LinearUtility>(&t.utility))
    return make_cone(n, {}, {lin->a});
  if (const auto* ml = std::get_if<MinLinearUtility>(&t.utility)) {
    PolyhedralCone c = make_cone(n, {}, ml->rows);
    if (!cone_nonempty(c)) throw invalid_input("bounded-type utility unsupported");
    return c;
  }
  const auto& ec = std::get<ExplicitConeUtility>(t.utility);
  return make_cone(n, {}, facet_normals(make_generators(n, ec.closure.generators)));
}

PolyhedralCone market_cone(const Trader& t, int n) {
  asymptotic_cone(t, n);  // shared validation: supported form, solid cone
  return strict_dual(closure_generators(t, n));
}

LAReport limited_arbitrage(const Economy& e) {
  validate_economy(e, /*allow_single=*/true);
  LAReport rep;
  std::vector<PolyhedralCone> cones;
  for (const Trader& t : e.traders) {
    PolyhedralCone d = market_cone(t, e.n);
    rep.per_trader_cones.emplace(t.id, d);
    cones.push_back(std::move(d));
  }
  std::optional<RatVec> w = cone_nonempty(intersect_cones(cones));
  rep.holds = w.has_value();
  if (w) {
    for (const PolyhedralCone& d : cones)
      if (!cone_contains(d, *w))
        throw inconsistency_error("arbitrage witness fails a market cone re-check");
    rep.witness_price = std::move(w);
  }
  return rep;
}

bool equilibrium_exists(const Economy& e) { return limited_arbitrage(e).holds; }

LSReport limited_diversity(const Economy& e) {
  validate_economy(e, /*allow_single=*/true);
  coalition_guard(e);
  IndexedFamily f = market_cone_family(e);
  LSReport rep;
  foreach_theta(e.traders.size(), [&](const ThetaSet& theta) {
    HomologyProfile prof = union_profile(f, theta);
    if (!prof.is_acyclic() && !rep.witness_theta) rep.witness_theta = theta;
    rep.union_profiles.emplace(theta, std::move(prof));
  });
  rep.holds = !rep.witness_theta.has_value();
  return rep;
}

bool social_choice_exists(const Economy& e) { return limited_diversity(e).holds; }

bool social_choice_exists(const Economy& e, const ThetaSet& theta) {
  validate_economy(e, /*allow_single=*/true);
  coalition_guard(e);
  return union_profile(market_cone_family(e), theta).is_acyclic();
}

Economy subeconomy(const Economy& e, const ThetaSet& theta) {
  validate_economy(e, /*allow_single=*/true);
  if (theta.empty()) throw invalid_input("subeconomy needs a nonempty trader subset");
  Economy sub;
  sub.n = e.n;
  sub.max_index_set = e.max_index_set;
  for (size_t k = 0; k < theta.size(); ++k) {
    if (theta[k] >= e.traders.size()) throw invalid_input("subeconomy index out of range");
    if (k > 0 && theta[k] <= theta[k - 1])
      throw invalid_input("subeconomy indices must be sorted and distinct");
    sub.traders.push_back(e.traders[theta[k]]);
  }
  return sub;
}

Theorem11Report theorem11_check(const Economy& e, bool self_test_mode) {
  validate_economy(e, /*allow_single=*/true);
  coalition_guard(e);
  const size_t h = e.traders.size();

  Theorem11Report rep;
  rep.arbitrage = limited_arbitrage(e);
  rep.verdict_a = rep.arbitrage.holds;

  // (b): every coalition, each decided by a fresh restricted-economy check.
  rep.verdict_b = true;
  foreach_theta(h, [&](const ThetaSet& theta) {
    bool ok = limited_arbitrage(subeconomy(e, theta)).holds;
    rep.subeconomy_la.emplace(theta, ok);
    rep.verdict_b = rep.verdict_b && ok;
  });

  // Feasibility can only shrink as traders join, so a coalition that clears
  // the check forces every facet of it to clear as well.
  for (const auto& [theta, ok] : rep.subeconomy_la) {
    if (!ok || theta.size() < 2) continue;
    for (size_t drop = 0; drop < theta.size(); ++drop) {
      ThetaSet facet;
      for (size_t k = 0; k < theta.size(); ++k)
        if (k != drop) facet.push_back(theta[k]);
      if (!rep.subeconomy_la.at(facet))
        throw inconsistency_error("arbitrage feasibility is not monotone across subeconomies");
    }
  }

  // (c): recomputed from scratch for coalitions of at most n+1 traders.
  rep.verdict_c = true;
  const size_t cap = std::min(h, size_t(e.n) + 1);
  foreach_theta(h, [&](const ThetaSet& theta) {
    if (theta.size() > cap) return;
    rep.verdict_c = rep.verdict_c && limited_arbitrage(subeconomy(e, theta)).holds;
  });

  rep.diversity = limited_diversity(e);
  rep.verdict_d = rep.diversity.holds;

  rep.consistent = rep.verdict_a == rep.verdict_b && rep.verdict_b == rep.verdict_c &&
                   rep.verdict_c == rep.verdict_d;
  if (!rep.consistent && self_test_mode)
    throw inconsistency_error("arbitrage and diversity verdicts disagree");
  return rep;
}

}  // namespace conetop
