#pragma once

#include <optional>
#include <vector>

#include "conetop/lp.hpp"
#include "conetop/matrix.hpp"
#include "conetop/simplicial.hpp"

namespace conetop {

// Convex polyhedral cone {x : weak rows w satisfy w.x >= 0, strict rows s
// satisfy s.x > 0}, minus the origin when exclude_origin.  Homogeneity is
// structural: the set is closed under positive scaling.
struct PolyhedralCone {
  int dim = 0;
  std::vector<RatVec> weak;
  std::vector<RatVec> strict;
  bool exclude_origin = false;
};

// Closed cone of nonnegative combinations of nonzero generators.
struct ConeGenerators {
  int dim = 0;
  std::vector<RatVec> generators;
};

PolyhedralCone make_cone(int dim, std::vector<RatVec> weak, std::vector<RatVec> strict = {},
                         bool exclude_origin = false);
ConeGenerators make_generators(int dim, std::vector<RatVec> generators);

// Exact membership: weak/strict rows and the origin-exclusion flag.
bool cone_contains(const PolyhedralCone& c, const RatVec& x);

// Exact emptiness decision with witness.  Strict rows reduce to s.x >= 1 by
// homogeneity; a pure weak cone minus the origin is probed along the 2n
// directions +e1, -e1, +e2, ... and the first feasible system supplies the
// witness, which keeps the result deterministic.
std::optional<RatVec> cone_nonempty(const PolyhedralCone& c);

// Row concatenation; exclude_origin is the OR of the inputs.
PolyhedralCone intersect_cones(const std::vector<PolyhedralCone>& cs);

// {p : p.g >= 0 for every generator g} minus the origin.  Requires the
// generated cone to be solid (full-dimensional closure); for solid cones
// this weak dual minus the origin coincides with the set of p strictly
// positive on the cone's interior.
PolyhedralCone strict_dual(const ConeGenerators& g);

// Generators of the closed cone {x : rows.x >= 0 componentwise}: a basis of
// the lineality space in both signs plus the extreme rays of the pointed
// part, each normalized to a primitive integer vector, sorted.  Subset
// enumeration over the rows; intended for small systems.
ConeGenerators cone_generators(int dim, const std::vector<RatVec>& weak_rows);

// Facet description {f : f.x >= 0 valid and tight on a rank n-1 subset} of a
// solid generated cone, primitive and sorted.  Empty result means the cone
// is the whole space.  Throws when the generators do not span.
std::vector<RatVec> facet_normals(const ConeGenerators& g);

// Nerve of a labeled-by-index list of cones: vertex i present iff cones[i]
// is nonempty, subset a simplex iff the intersection is nonempty.  Built by
// monotone expansion, so only subsets whose facets are all simplices are
// tested.
SimplicialComplex build_nerve(const std::vector<PolyhedralCone>& cones,
                              size_t max_members = 16);

}  // namespace conetop
