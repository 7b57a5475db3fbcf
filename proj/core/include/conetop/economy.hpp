#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conetop/cones.hpp"
#include "conetop/families.hpp"

namespace conetop {

// Utility forms whose unbounded directions form an exactly computable
// polyhedral cone: u(x) = a.x, u(x) = min_j a_j.x, and an explicitly given
// closure of the preferred-direction cone.
struct LinearUtility {
  RatVec a;  // nonzero
};
struct MinLinearUtility {
  std::vector<RatVec> rows;  // nonempty, each row nonzero
};
struct ExplicitConeUtility {
  ConeGenerators closure;  // solid closure of the preferred-direction cone
};
using Utility = std::variant<LinearUtility, MinLinearUtility, ExplicitConeUtility>;

struct Trader {
  std::string id;
  RatVec endowment;  // nonzero; stored for fidelity, the derived cones ignore it
  Utility utility;
};

// Market economy over Q^n.  Top-level economies need n > 1 and more than one
// trader; restrictions built by subeconomy() may shrink to a single trader.
struct Economy {
  int n = 0;
  std::vector<Trader> traders;
  size_t max_index_set = 16;  // coalition enumeration guard
};

Economy make_economy(int n, std::vector<Trader> traders, size_t max_index_set = 16);

// Directions v along which the utility climbs to its supremum from any base
// point.  Linear a: the open half-space a.v > 0.  MinLinear: the open cone
// where every row is positive, rejected as unsupported when that cone is
// empty (the supremum then depends on the base point and is not reached
// along a polyhedral direction set).  Explicit closure: its interior, as the
// strict form of the facet description; requires a solid cone.
PolyhedralCone asymptotic_cone(const Trader& t, int n);

// Prices valuing every asymptotic direction positively: the dual of the
// closure of the asymptotic cone, minus the origin.  Pointed because the
// asymptotic cone is solid for every supported form.
PolyhedralCone market_cone(const Trader& t, int n);

struct LAReport {
  bool holds = false;
  std::optional<RatVec> witness_price;  // present iff holds
  std::map<std::string, PolyhedralCone> per_trader_cones;
};

// Limited arbitrage: the market cones have a common price.  The witness is
// re-verified against every trader's cone.  Defined for one-trader
// restrictions too, where it reduces to nonemptiness of the single cone.
LAReport limited_arbitrage(const Economy& e);

// A competitive equilibrium exists exactly when arbitrage is limited.
bool equilibrium_exists(const Economy& e);

struct LSReport {
  bool holds = false;
  std::optional<ThetaSet> witness_theta;  // lex-first coalition with non-acyclic union
  std::map<ThetaSet, HomologyProfile> union_profiles;
};

// Limited social diversity: every nonempty coalition's union of market
// cones is acyclic, each union read off the coalition's nerve.
LSReport limited_diversity(const Economy& e);

// A social choice function exists exactly when diversity is limited; for a
// single coalition this is acyclicity of its union.
bool social_choice_exists(const Economy& e);
bool social_choice_exists(const Economy& e, const ThetaSet& theta);

// Restriction to the traders named by theta, same goods space.
Economy subeconomy(const Economy& e, const ThetaSet& theta);

struct Theorem11Report {
  bool verdict_a = false;   // limited arbitrage for the whole economy
  bool verdict_b = false;   // limited arbitrage for every subeconomy
  bool verdict_c = false;   // ... for every subeconomy of at most n+1 traders
  bool verdict_d = false;   // limited social diversity
  bool consistent = false;  // the four verdicts agree
  std::map<ThetaSet, bool> subeconomy_la;
  LAReport arbitrage;
  LSReport diversity;
};

// The four equivalent market conditions, each computed independently: (a)
// one intersection check, (b) and (c) fresh checks on restricted economies,
// (d) the union condition.  Arbitrage feasibility must be monotone down the
// coalition lattice (intersections only shrink), and a violation throws; in
// self-test mode a disagreement between the four verdicts throws as well.
Theorem11Report theorem11_check(const Economy& e, bool self_test_mode = false);

}  // namespace conetop
