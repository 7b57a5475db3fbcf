#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conetop/homology.hpp"
#include "conetop/lp.hpp"
#include "conetop/simplicial.hpp"

namespace conetop {

// Covers live on a subdivision X' of a complex X whose vertex set is the
// index set S.  Closed sets are face-closed subcomplexes of X'; open sets
// are unions of open vertex stars of X', represented by their star centers.

struct RegularCover {
  SubdivisionMap subdivision;         // X' over X; S = vertices of X
  std::map<Vertex, Subcomplex> sets;  // alpha -> closed set C_alpha in X'
  size_t max_index_set = 16;          // subset enumeration guard
};

struct SimpleCover {
  SubdivisionMap subdivision;                        // X' over X
  std::map<Vertex, std::vector<Vertex>> star_sets;   // alpha -> star centers W_alpha in X'
  size_t max_index_set = 16;
};

// Validated constructors.  Structural invariants: one set per vertex of X,
// sets live in X', and the sets cover X' (for star sets: every vertex of X'
// is a star center of some member, so the open stars cover the space).
RegularCover make_regular_cover(SubdivisionMap subdivision,
                                std::map<Vertex, Subcomplex> sets,
                                size_t max_index_set = 16);
SimpleCover make_simple_cover(SubdivisionMap subdivision,
                              std::map<Vertex, std::vector<Vertex>> star_sets,
                              size_t max_index_set = 16);

// Simplices of X' carried into the given subcomplex of X, as a subcomplex
// of X'.  This is the subdivision of a subspace of X inside X'.
Subcomplex subdivision_image(const SubdivisionMap& sd, const Subcomplex& of_target);

struct RegularityReport {
  bool regular = false;
  // Lex-least subset theta of S whose full subcomplex escapes the union of
  // its sets, when not regular.
  std::optional<std::vector<Vertex>> witness_theta;
};

// Checks, for every nonempty theta within S, that the subdivision image of
// the full subcomplex on theta lies in the union of the chosen sets.
RegularityReport is_regular_cover(const RegularCover& rc);

struct SimplicityReport {
  bool simple = false;
  std::optional<Vertex> witness_alpha;  // first index whose closure escapes its star
};

// Checks cl(U_alpha) inside star(alpha) combinatorially: the closed star in
// X' of every center w in W_alpha consists of simplices carried into faces
// of X having alpha as a vertex.
SimplicityReport is_simple_cover(const SimpleCover& sc);

// Builds the nerve of the cover (subsets of S with nonempty combinatorial
// intersection) and tests identity with X under the bijection alpha <-> set.
// Throws invalid_input when the cover fails its validity check.
bool nerve_matches_complex(const RegularCover& rc);
bool nerve_matches_complex(const SimpleCover& sc);

// For a regular cover of a full simplex, returns a simplex of X' lying in
// every set.  An empty intersection here is a bug signal, never a verdict:
// it throws inconsistency_error.
Simplex kkm_check(const RegularCover& rc);

// Closest-vertex cover: every simplex of X' is assigned to the least vertex
// of the carrier of its least vertex, and C_alpha is the closure of alpha's
// block.  Regular for any subdivision; the base for randomized covers.
RegularCover closest_vertex_cover(const SubdivisionMap& sd);

// Star refinement: two barycentric levels over x, each new vertex assigned
// to the least vertex of the smallest face of its chain.  Simple for any
// complex; one level is generally not (a midpoint's closed star reaches
// both endpoints).
SimpleCover star_refinement_cover(ComplexPtr x);

// Convex polytope { x : a x <= b } with rational data; possibly empty or
// unbounded.
struct Polytope {
  std::vector<RatVec> a;  // rows
  RatVec b;
};

struct ConvexPolytopeFamily {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<Polytope> members;
  size_t max_index_set = 16;  // subfamily enumeration guard
};

ConvexPolytopeFamily make_polytope_family(int dim, std::vector<std::string> labels,
                                          std::vector<Polytope> members,
                                          size_t max_index_set = 16);

// Exact point in the intersection of the chosen members, when nonempty.
// Witnesses are re-verified against every inequality before being returned.
std::optional<RatVec> polytope_intersection_point(const ConvexPolytopeFamily& f,
                                                  const std::vector<size_t>& subset);

struct HellyReport {
  size_t subfamily_size = 0;  // dim + 1
  bool hypothesis_met = false;
  std::optional<std::vector<size_t>> hypothesis_witness;  // first empty (dim+1)-subfamily
  // Set only when the hypothesis holds; guaranteed true for convex members,
  // so a false value never escapes (it throws inconsistency_error instead).
  std::optional<bool> total_nonempty;
  std::optional<RatVec> point_witness;
};

// Helly property: if every (dim+1)-subfamily meets, the whole family meets.
// Requires at least dim+1 members.
HellyReport helly_check(const ConvexPolytopeFamily& f);

// Report for the intersection criteria on families with verified
// wise-intersection preconditions.  The precondition arity is k-1 for a
// family of k sets, lowered to n+1 when k > n+1 where n is the dimension of
// the union; the lowered form is flagged.
struct IntersectionCriterionReport {
  size_t family_size = 0;
  size_t precondition_arity = 0;
  bool used_dimension_bound = false;
  bool precondition_met = false;
  std::optional<std::vector<size_t>> empty_subfamily;      // member positions
  std::optional<std::vector<Vertex>> regularity_witness;   // closed criterion only
  HomologyProfile union_profile;
  bool union_acyclic = false;
  bool total_nonempty = false;
  std::optional<Simplex> simplex_witness;
  // Total intersection nonempty iff union acyclic; claimed only under a met
  // precondition.
  std::optional<bool> criterion_holds;
};

// Criterion for a family treated as simple: subcomplex members, every
// (k-1)-subfamily nonempty, then nonempty total intersection iff acyclic
// union.  Both sides are computed independently and reported.
class IndexedFamily;  // families.hpp
IntersectionCriterionReport simple_family_intersection_criterion(const IndexedFamily& f);

// Same criterion for closed sets forming a regular cover; the regularity
// condition joins the precondition and its witness is reported on failure.
IntersectionCriterionReport closed_family_intersection_criterion(const RegularCover& rc);

}  // namespace conetop
