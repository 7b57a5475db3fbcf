#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "conetop/covers.hpp"
#include "conetop/economy.hpp"
#include "conetop/families.hpp"

namespace conetop::io {

using json = nlohmann::json;

// Rationals travel as integers or "p/q" strings; floats are refused so no
// value ever passes through a double.
Rat rational_from_json(const json& j);
json rational_to_json(const Rat& r);

RatVec vector_from_json(const json& j, int expect_dim);
json vector_to_json(const RatVec& v);

Simplex simplex_from_json(const json& j);
json simplex_to_json(const Simplex& s);
json theta_to_json(const ThetaSet& t);

// {"vertices": [...], "maximal_simplices": [[...]]}; face closure applied.
ComplexPtr complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& c);

// {"dim": n, "weak": [[..]], "strict": [[..]], "exclude_origin": bool} or
// {"generators": [[..]], "derive": "strict_dual"}.
PolyhedralCone cone_from_json(const json& j, std::optional<int> expect_dim = {});
json cone_to_json(const PolyhedralCone& c);

// {"ambient": <complex> | {"dimension": n}, "members": {label: ...}} where a
// member is a simplex list (subcomplex backend) or a cone spec.
IndexedFamily family_from_json(const json& j, size_t max_index_set);

// Exactly one of the two cover shapes, decided by the member form.
struct LoadedCover {
  std::optional<RegularCover> regular;
  std::optional<SimpleCover> simple;
};
LoadedCover cover_from_json(const json& j, size_t max_index_set);

ConvexPolytopeFamily polytopes_from_json(const json& j, size_t max_index_set);

Economy economy_from_json(const json& j, size_t max_index_set);
json economy_to_json(const Economy& e);

json profile_to_json(const HomologyProfile& p);

json load_file(const std::string& path);

}  // namespace conetop::io
