#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conetop/cones.hpp"
#include "conetop/homology.hpp"

namespace conetop {

struct FamilyOptions {
  size_t max_index_set = 16;  // subset enumeration guard
  bool self_test_mode = false;  // equivalence failures become hard errors
};

// Sorted member indices naming a subfamily.
using ThetaSet = std::vector<size_t>;

// Finite labeled family over one of two backends: subcomplexes of a shared
// ambient complex, or polyhedral cones in a shared dimension.  The index set
// is ordered; subfamily enumeration is lexicographic over positions.
class IndexedFamily {
 public:
  static IndexedFamily from_subcomplexes(ComplexPtr ambient, std::vector<std::string> labels,
                                         std::vector<Subcomplex> members,
                                         FamilyOptions opt = {});
  static IndexedFamily from_cones(std::vector<std::string> labels,
                                  std::vector<PolyhedralCone> members, FamilyOptions opt = {});

  size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool cone_backend() const { return cone_backend_; }
  int cone_dim() const;
  const ComplexPtr& ambient() const;
  const Subcomplex& subcomplex_member(size_t i) const;
  const PolyhedralCone& cone_member(size_t i) const;
  const FamilyOptions& options() const { return opt_; }

 private:
  std::vector<std::string> labels_;
  bool cone_backend_ = false;
  ComplexPtr ambient_;
  std::vector<Subcomplex> subs_;
  int dim_ = 0;
  std::vector<PolyhedralCone> cones_;
  FamilyOptions opt_;
};

// Reduced homology of the subfamily intersection.  Cone backend decides by
// nonemptiness alone: a nonempty cone member intersection reports the
// profile of a contractible space (documented convexity assumption).
HomologyProfile intersection_profile(const IndexedFamily& f, const ThetaSet& theta);

// Reduced homology of the subfamily union.  Subcomplex backend computes
// directly; cone backend takes the nerve of the subfamily.
HomologyProfile union_profile(const IndexedFamily& f, const ThetaSet& theta);

// Nerve of the subfamily: vertex = index with nonempty member, simplex =
// subset with nonempty intersection.  Works on both backends.
SimplicialComplex family_nerve(const IndexedFamily& f, const ThetaSet& theta);
SimplicialComplex family_nerve(const IndexedFamily& f);

struct ConditionReport {
  char condition = 'A';  // 'A' intersections, 'B' unions
  int k = 0;
  bool holds = false;
  std::optional<ThetaSet> witness_theta;  // first violating subfamily, lex order
  std::optional<HomologyProfile> witness_profile;
};

// Condition A_k / B_k: every subfamily with at most k+1 members has acyclic
// intersection / union.  Subfamilies are visited in lexicographic order and
// the first violation is the witness.
ConditionReport check_condition(const IndexedFamily& f, char which, int k);

struct DualityReport {
  ThetaSet theta;
  int k = 0;                              // |theta| - 1
  bool hypothesis_met = false;            // A_{k-1} within theta
  std::optional<ThetaSet> hypothesis_witness;
  HomologyProfile union_profile;
  HomologyProfile intersection_profile;
  std::optional<bool> shift_matches;      // set only when the hypothesis holds
};

// Union/intersection duality for one subfamily of k+1 members: under
// A_{k-1}, H_q(union) must equal H_{q-k}(intersection) for every q.  A
// mismatch under a verified hypothesis is an implementation bug; in
// self-test mode it throws inconsistency_error.
DualityReport verify_duality(const IndexedFamily& f, const ThetaSet& theta);

struct EquivalenceReport {
  ConditionReport a;
  ConditionReport b;
  bool agree = false;
};

// A_k and B_k computed independently; their verdicts must coincide.
EquivalenceReport condition_equivalence(const IndexedFamily& f, int k);

struct IntersectionUnionReport {
  // First clause: all subfamily intersections acyclic iff B_{k-1}.
  bool all_intersections_acyclic = false;
  std::optional<ThetaSet> intersection_witness;
  bool all_unions_acyclic = false;
  std::optional<ThetaSet> union_witness;
  bool first_clause_agree = false;
  // Second clause, cone backends only (needs the ambient dimension n):
  // total intersection acyclic iff the whole union is acyclic and
  // B_{min(n, k-2)} holds.
  std::optional<bool> total_intersection_acyclic;
  std::optional<bool> union_acyclic_and_bounded;
  std::optional<bool> second_clause_agree;
};

// Whole-family intersection/union equivalence for |S| = k >= 2.
IntersectionUnionReport intersection_union_equivalence(const IndexedFamily& f);

struct NonemptyIntersectionReport {
  // Precondition: every subfamily intersection is empty or acyclic.
  // Automatic for cones; verified for subcomplex backends.
  bool precondition_met = false;
  std::optional<ThetaSet> precondition_witness;
  bool total_nonempty = false;
  std::optional<RatVec> point_witness;     // cone backend
  std::optional<Simplex> simplex_witness;  // subcomplex backend
  bool all_unions_acyclic = false;
  std::optional<ThetaSet> union_witness;
  bool agree = false;
};

// Nonempty total intersection iff every subfamily union is acyclic, both
// sides computed independently.
NonemptyIntersectionReport nonempty_intersection_criterion(const IndexedFamily& f);

struct BoundReport {
  int n = 0;  // ambient dimension used
  bool hypothesis_met = false;  // A_n
  std::optional<ThetaSet> hypothesis_witness;
  bool conclusions_hold = false;  // A_k, B_k for all k, nonempty intersection
  std::optional<std::string> failure_note;
};

// Dimension bound: a family in dimension n satisfying A_n satisfies every
// A_k and B_k and has nonempty total intersection.  Subcomplex backends
// must declare n explicitly.
BoundReport dimension_bound_check(const IndexedFamily& f, std::optional<int> declared_n = {});

}  // namespace conetop
