// conetop: JSON front end over the library.  One subcommand per check,
// reports printed as text or JSON to stdout.
//
// Exit codes: 0 check passed, 1 check completed with a negative verdict,
// 2 input problem (bad JSON, schema, flags, guards), 3 internal
// inconsistency (a theorem cross-check came out false: a bug, not an
// answer).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conetop/covers.hpp"
#include "conetop/economy.hpp"
#include "conetop/errors.hpp"
#include "conetop/families.hpp"
#include "conetop/homology.hpp"
#include "json_io.hpp"
#include "selftest.hpp"

#ifndef CONETOP_VERSION
#define CONETOP_VERSION "0.0.0"
#endif

namespace {

using conetop::io::json;

constexpr const char* kVersion = CONETOP_VERSION;

struct Result {
  json verdict;
  json details;
  int exit_code = 0;
};

json envelope(const std::string& command, const Result& r, long ms) {
  return json{{"command", command},
              {"details", r.details},
              {"timing", {{"milliseconds", ms}}},
              {"tool", {{"name", "conetop"}, {"version", kVersion}}},
              {"verdict", r.verdict}};
}

// Text output is a walk of the JSON document, so the two formats can never
// drift apart.
void render(std::ostream& os, const std::string& key, const json& j, int depth) {
  std::string pad(size_t(depth) * 2, ' ');
  if (j.is_object() && !j.empty()) {
    os << pad << key << ":\n";
    for (const auto& [k, v] : j.items()) render(os, k, v, depth + 1);
  } else if (j.is_array() && !j.empty() && j.front().is_structured()) {
    os << pad << key << ":\n";
    for (size_t i = 0; i < j.size(); ++i) render(os, "[" + std::to_string(i) + "]", j[i], depth + 1);
  } else {
    os << pad << key << ": " << j.dump() << "\n";
  }
}

void emit(const json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : report.items()) render(std::cout, k, v, 0);
}

// Guard resolution: explicit flag beats CONETOP_GUARD beats the default.
size_t resolve_guard(std::optional<long> flag_value) {
  long v;
  if (flag_value) {
    v = *flag_value;
  } else {
    const char* env = std::getenv("CONETOP_GUARD");
    if (!env) return 16;
    std::string s = env;
    try {
      size_t pos = 0;
      v = std::stol(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw conetop::invalid_input("CONETOP_GUARD must be an integer between 1 and 24");
    }
  }
  if (v < 1 || v > 24) throw conetop::guard_exceeded("index-set guard must lie between 1 and 24");
  return size_t(v);
}

json condition_to_json(const conetop::ConditionReport& c) {
  json j{{"condition", std::string(1, c.condition)}, {"k", c.k}, {"holds", c.holds}};
  if (c.witness_theta) j["witness_theta"] = conetop::io::theta_to_json(*c.witness_theta);
  if (c.witness_profile) j["witness_profile"] = conetop::io::profile_to_json(*c.witness_profile);
  return j;
}

json criterion_to_json(const conetop::NonemptyIntersectionReport& rep) {
  json j{{"precondition_met", rep.precondition_met},
         {"total_nonempty", rep.total_nonempty},
         {"all_unions_acyclic", rep.all_unions_acyclic},
         {"agree", rep.agree}};
  if (rep.precondition_witness)
    j["precondition_witness"] = conetop::io::theta_to_json(*rep.precondition_witness);
  if (rep.point_witness) j["point_witness"] = conetop::io::vector_to_json(*rep.point_witness);
  if (rep.simplex_witness) j["simplex_witness"] = conetop::io::simplex_to_json(*rep.simplex_witness);
  if (rep.union_witness) j["union_witness"] = conetop::io::theta_to_json(*rep.union_witness);
  return j;
}

Result run_homology(const json& in) {
  conetop::ComplexPtr c = conetop::io::complex_from_json(in);
  conetop::HomologyProfile p = reduced_homology(*c);
  Result r;
  r.details = {{"profile", conetop::io::profile_to_json(p)}};
  bool acyclic = p.is_acyclic();
  r.verdict = {{"acyclic", acyclic}};
  r.exit_code = acyclic ? 0 : 1;
  return r;
}

Result run_family(const json& in, size_t guard, int max_k) {
  conetop::IndexedFamily f = conetop::io::family_from_json(in, guard);
  Result r;
  json equivalences = json::array();
  bool consistent = true;
  bool holds_at_max = false;
  for (int k = 0; k <= max_k; ++k) {
    auto rep = condition_equivalence(f, k);
    consistent = consistent && rep.agree;
    if (k == max_k) holds_at_max = rep.a.holds && rep.b.holds;
    equivalences.push_back(
        {{"k", k}, {"a", condition_to_json(rep.a)}, {"b", condition_to_json(rep.b)}, {"agree", rep.agree}});
  }
  auto crit = nonempty_intersection_criterion(f);
  if (crit.precondition_met) consistent = consistent && crit.agree;
  r.details = {{"equivalences", equivalences}, {"intersection_criterion", criterion_to_json(crit)}};
  r.verdict = {{"max_k", max_k}, {"conditions_hold", holds_at_max}, {"consistent", consistent}};
  r.exit_code = !consistent ? 3 : holds_at_max ? 0 : 1;
  return r;
}

Result run_cones(const json& in, size_t guard) {
  conetop::IndexedFamily f = conetop::io::family_from_json(in, guard);
  if (!f.cone_backend())
    throw conetop::invalid_input("cones command needs a family over an ambient dimension");
  auto rep = nonempty_intersection_criterion(f);
  Result r;
  r.details = {{"criterion", criterion_to_json(rep)}};
  r.verdict = {{"total_nonempty", rep.total_nonempty}, {"consistent", rep.agree}};
  r.exit_code = !rep.agree ? 3 : rep.total_nonempty ? 0 : 1;
  return r;
}

Result run_cover(const json& in, size_t guard, const std::string& check) {
  conetop::io::LoadedCover lc = conetop::io::cover_from_json(in, guard);
  auto regular = [&]() -> const conetop::RegularCover& {
    if (!lc.regular)
      throw conetop::invalid_input("--check " + check + " needs the closed-set cover form");
    return *lc.regular;
  };

  Result r;
  if (check == "regular") {
    auto rep = is_regular_cover(regular());
    r.details = json::object();
    if (rep.witness_theta) r.details["witness_theta"] = conetop::io::simplex_to_json(*rep.witness_theta);
    r.verdict = {{"regular", rep.regular}};
    r.exit_code = rep.regular ? 0 : 1;
  } else if (check == "simple") {
    if (!lc.simple)
      throw conetop::invalid_input("--check simple needs the star-set cover form");
    auto rep = is_simple_cover(*lc.simple);
    r.details = json::object();
    if (rep.witness_alpha) r.details["witness_alpha"] = *rep.witness_alpha;
    r.verdict = {{"simple", rep.simple}};
    r.exit_code = rep.simple ? 0 : 1;
  } else if (check == "kkm") {
    conetop::Simplex w = kkm_check(regular());
    r.details = {{"witness_simplex", conetop::io::simplex_to_json(w)}};
    r.verdict = {{"total_intersection_nonempty", true}};
    r.exit_code = 0;
  } else if (check == "nerve") {
    bool matches = lc.regular ? nerve_matches_complex(*lc.regular) : nerve_matches_complex(*lc.simple);
    r.details = json::object();
    r.verdict = {{"nerve_matches", matches}};
    r.exit_code = matches ? 0 : 1;
  } else {  // criterion
    auto rep = closed_family_intersection_criterion(regular());
    r.details = {{"family_size", rep.family_size},
                 {"precondition_arity", rep.precondition_arity},
                 {"used_dimension_bound", rep.used_dimension_bound},
                 {"precondition_met", rep.precondition_met},
                 {"union_profile", conetop::io::profile_to_json(rep.union_profile)},
                 {"union_acyclic", rep.union_acyclic},
                 {"total_nonempty", rep.total_nonempty}};
    if (rep.empty_subfamily) r.details["empty_subfamily"] = conetop::io::theta_to_json(*rep.empty_subfamily);
    if (rep.regularity_witness)
      r.details["regularity_witness"] = conetop::io::simplex_to_json(*rep.regularity_witness);
    if (rep.simplex_witness) r.details["simplex_witness"] = conetop::io::simplex_to_json(*rep.simplex_witness);
    if (rep.criterion_holds) r.details["criterion_holds"] = *rep.criterion_holds;
    bool holds = rep.criterion_holds.has_value() && *rep.criterion_holds;
    r.verdict = {{"criterion_holds", holds}, {"precondition_met", rep.precondition_met}};
    // A met precondition with a false criterion is a broken theorem.
    r.exit_code = holds ? 0 : rep.precondition_met ? 3 : 1;
  }
  return r;
}

Result run_helly(const json& in, size_t guard) {
  auto f = conetop::io::polytopes_from_json(in, guard);
  auto rep = helly_check(f);
  Result r;
  r.details = {{"subfamily_size", rep.subfamily_size}, {"hypothesis_met", rep.hypothesis_met}};
  if (rep.hypothesis_witness)
    r.details["hypothesis_witness"] = conetop::io::theta_to_json(*rep.hypothesis_witness);
  if (rep.total_nonempty) r.details["total_nonempty"] = *rep.total_nonempty;
  if (rep.point_witness) r.details["point_witness"] = conetop::io::vector_to_json(*rep.point_witness);
  r.verdict = {{"hypothesis_met", rep.hypothesis_met},
               {"total_nonempty", rep.total_nonempty.has_value() && *rep.total_nonempty}};
  r.exit_code = rep.hypothesis_met ? 0 : 1;
  return r;
}

json theta_labels(const conetop::Economy& e, const conetop::ThetaSet& theta) {
  json a = json::array();
  for (size_t i : theta) a.push_back(e.traders[i].id);
  return a;
}

std::string theta_key(const conetop::Economy& e, const conetop::ThetaSet& theta) {
  std::string s;
  for (size_t i = 0; i < theta.size(); ++i) {
    if (i) s += ",";
    s += e.traders[theta[i]].id;
  }
  return s;
}

json la_to_json(const conetop::LAReport& rep) {
  json cones = json::object();
  for (const auto& [id, c] : rep.per_trader_cones) cones[id] = conetop::io::cone_to_json(c);
  json j{{"holds", rep.holds}, {"market_cones", cones}};
  if (rep.witness_price) j["witness_price"] = conetop::io::vector_to_json(*rep.witness_price);
  return j;
}

json ls_to_json(const conetop::Economy& e, const conetop::LSReport& rep) {
  json profiles = json::object();
  for (const auto& [theta, p] : rep.union_profiles)
    profiles[theta_key(e, theta)] = conetop::io::profile_to_json(p);
  json j{{"holds", rep.holds}, {"union_profiles", profiles}};
  if (rep.witness_theta) j["witness_theta"] = theta_labels(e, *rep.witness_theta);
  return j;
}

// Size-ascending, then lexicographic: the canonical smallest coalition whose
// market cones have no common price.  Exists whenever arbitrage fails, since
// the full coalition qualifies.
conetop::ThetaSet minimal_empty_coalition(const conetop::Economy& e, const conetop::LAReport& la) {
  const size_t h = e.traders.size();
  conetop::ThetaSet everyone(h);
  std::iota(everyone.begin(), everyone.end(), size_t{0});
  if (h > e.max_index_set) return everyone;  // refinement would blow the guard

  std::vector<conetop::PolyhedralCone> cones;
  cones.reserve(h);
  for (const auto& t : e.traders) cones.push_back(la.per_trader_cones.at(t.id));

  for (size_t k = 1; k <= h; ++k) {
    std::vector<char> mask(h, 0);
    std::fill(mask.begin(), mask.begin() + long(k), 1);
    do {
      conetop::ThetaSet theta;
      std::vector<conetop::PolyhedralCone> sub;
      for (size_t i = 0; i < h; ++i)
        if (mask[i]) {
          theta.push_back(i);
          sub.push_back(cones[i]);
        }
      if (!cone_nonempty(intersect_cones(sub))) return theta;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  throw conetop::inconsistency_error("arbitrage failed but every coalition has a common price");
}

Result run_economy(const json& in, size_t guard, bool theorem11) {
  conetop::Economy e = conetop::io::economy_from_json(in, guard);
  Result r;
  if (!theorem11) {
    conetop::LAReport rep = limited_arbitrage(e);
    r.details = {{"arbitrage", la_to_json(rep)}};
    if (!rep.holds) r.details["empty_coalition"] = theta_labels(e, minimal_empty_coalition(e, rep));
    r.verdict = {{"limited_arbitrage", rep.holds}, {"equilibrium_exists", rep.holds}};
    r.exit_code = rep.holds ? 0 : 1;
    return r;
  }

  conetop::Theorem11Report rep = theorem11_check(e);
  json sub = json::object();
  for (const auto& [theta, ok] : rep.subeconomy_la) sub[theta_key(e, theta)] = ok;
  r.details = {{"arbitrage", la_to_json(rep.arbitrage)},
               {"subeconomy_arbitrage", sub},
               {"diversity", ls_to_json(e, rep.diversity)}};
  r.verdict = {{"limited_arbitrage", rep.verdict_a},
               {"subeconomies_pass", rep.verdict_b},
               {"bounded_coalitions_pass", rep.verdict_c},
               {"limited_diversity", rep.verdict_d},
               {"consistent", rep.consistent}};
  bool all = rep.verdict_a && rep.verdict_b && rep.verdict_c && rep.verdict_d;
  r.exit_code = !rep.consistent ? 3 : all ? 0 : 1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersecting-family, cover, and market-cone checks over exact rationals"};
  app.set_version_flag("--version", std::string("conetop ") + kVersion);
  app.require_subcommand(1);

  std::string report_format = "text";
  app.add_option("--report", report_format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  long guard_flag = 16;
  CLI::Option* guard_opt =
      app.add_option("--max-index-set", guard_flag,
                     "Subset enumeration guard, 1..24 (default 16; env CONETOP_GUARD)");

  std::string input_path;
  auto* homology = app.add_subcommand("homology", "Reduced integral homology of a complex");
  homology->add_option("input", input_path, "complex JSON")->required();

  auto* family = app.add_subcommand("family", "Acyclic-intersection vs acyclic-union conditions");
  family->add_option("input", input_path, "family JSON")->required();
  int max_k = 2;
  family->add_option("--max-k", max_k, "Largest k to test (default 2)")->check(CLI::Range(0, 8));

  auto* cones = app.add_subcommand("cones", "Nonempty-intersection criterion for cone families");
  cones->add_option("input", input_path, "cone family JSON")->required();

  auto* cover = app.add_subcommand("cover", "Cover validity and nerve checks");
  cover->add_option("input", input_path, "cover JSON")->required();
  std::string check = "regular";
  cover->add_option("--check", check, "regular|simple|kkm|nerve|criterion (default regular)")
      ->check(CLI::IsMember({"regular", "simple", "kkm", "nerve", "criterion"}));

  auto* helly = app.add_subcommand("helly", "Helly intersection property for polytope families");
  helly->add_option("input", input_path, "polytope family JSON")->required();

  auto* economy = app.add_subcommand("economy", "Limited arbitrage and market-condition checks");
  economy->add_option("input", input_path, "economy JSON")->required();
  bool theorem11 = false;
  economy->add_flag("--theorem11", theorem11, "Check all four equivalent market conditions");

  auto* selftest = app.add_subcommand("selftest", "Randomized theorem-equivalence suites");
  uint64_t seed = 42;
  selftest->add_option("--seed", seed, "Randomization seed (default 42)");
  bool inject_fault = false;
  selftest->add_flag("--inject-fault", inject_fault,
                     "Flip one golden expectation to prove the harness notices");

  for (auto* sc : app.get_subcommands({})) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // flag mistakes are input errors in our taxonomy
  }

  const bool as_json = report_format == "json";
  try {
    const size_t guard =
        resolve_guard(guard_opt->count() ? std::optional<long>(guard_flag) : std::nullopt);

    if (*selftest) {
      auto outcome = conetop::selftest::run(seed, inject_fault);
      emit(conetop::selftest::report(outcome, seed, inject_fault, kVersion), as_json);
      return outcome.all_passed() ? 0 : 3;
    }

    const auto started = std::chrono::steady_clock::now();
    Result r;
    std::string command;
    const json in = conetop::io::load_file(input_path);
    if (*homology) {
      command = "homology";
      r = run_homology(in);
    } else if (*family) {
      command = "family";
      r = run_family(in, guard, max_k);
    } else if (*cones) {
      command = "cones";
      r = run_cones(in, guard);
    } else if (*cover) {
      command = "cover";
      r = run_cover(in, guard, check);
    } else if (*helly) {
      command = "helly";
      r = run_helly(in, guard);
    } else {
      command = "economy";
      r = run_economy(in, guard, theorem11);
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - started)
                        .count();
    emit(envelope(command, r, long(ms)), as_json);
    return r.exit_code;
  } catch (const conetop::invalid_input& e) {
    std::cerr << "conetop: input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "conetop: input error: " << e.what() << "\n";
    return 2;
  } catch (const conetop::inconsistency_error& e) {
    std::cerr << "conetop: inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "conetop: internal error: " << e.what() << "\n";
    return 3;
  }
}
