#include "conetop/families.hpp"

#include <algorithm>
#include <set>

namespace conetop {

namespace {

void validate_theta(const IndexedFamily& f, const ThetaSet& theta, bool allow_empty = false) {
  if (theta.empty() && !allow_empty) throw invalid_input("empty subfamily index");
  if (!std::is_sorted(theta.begin(), theta.end()) ||
      std::adjacent_find(theta.begin(), theta.end()) != theta.end())
    throw invalid_input("subfamily indices must be sorted and distinct");
  if (!theta.empty() && theta.back() >= f.size())
    throw invalid_input("subfamily index out of range");
}

// Visit every nonempty subset of {0..n-1} with at most max_size elements in
// lexicographic order ((0), (0,1), (0,1,2), (0,2), (1), ...).  Returning
// false from the callback stops the walk.
template <typename F>
bool foreach_theta_lex(size_t n, size_t max_size, F&& visit) {
  ThetaSet theta;
  auto rec = [&](auto&& self, size_t from) -> bool {
    for (size_t i = from; i < n; ++i) {
      theta.push_back(i);
      if (!visit(theta)) return false;
      if (theta.size() < max_size)
        if (!self(self, i + 1)) return false;
      theta.pop_back();
    }
    return true;
  };
  return rec(rec, 0);
}

HomologyProfile contractible_profile() { return HomologyProfile{}; }

HomologyProfile empty_space_profile() {
  HomologyProfile h;
  h.minus_one_rank = 1;
  return h;
}

Subcomplex fold_intersection(const IndexedFamily& f, const ThetaSet& theta) {
  Subcomplex acc = f.subcomplex_member(theta[0]);
  for (size_t i = 1; i < theta.size(); ++i)
    acc = intersect_sub(acc, f.subcomplex_member(theta[i]));
  return acc;
}

Subcomplex fold_union(const IndexedFamily& f, const ThetaSet& theta) {
  Subcomplex acc = f.subcomplex_member(theta[0]);
  for (size_t i = 1; i < theta.size(); ++i)
    acc = union_sub(acc, f.subcomplex_member(theta[i]));
  return acc;
}

std::vector<PolyhedralCone> cone_subfamily(const IndexedFamily& f, const ThetaSet& theta) {
  std::vector<PolyhedralCone> cs;
  for (size_t i : theta) cs.push_back(f.cone_member(i));
  return cs;
}

}  // namespace

IndexedFamily IndexedFamily::from_subcomplexes(ComplexPtr ambient,
                                               std::vector<std::string> labels,
                                               std::vector<Subcomplex> members,
                                               FamilyOptions opt) {
  if (!ambient) throw invalid_input("family needs an ambient complex");
  if (labels.empty()) throw invalid_input("family needs at least one member");
  if (labels.size() != members.size()) throw invalid_input("labels and members differ in count");
  if (labels.size() > opt.max_index_set) throw guard_exceeded("family exceeds index-set guard");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    throw invalid_input("duplicate member labels");
  for (const Subcomplex& s : members) {
    if (!s.parent()) throw invalid_input("member without parent complex");
    if (s.parent() != ambient && !(*s.parent() == *ambient))
      throw invalid_input("member parent differs from ambient");
  }
  IndexedFamily f;
  f.labels_ = std::move(labels);
  f.cone_backend_ = false;
  f.ambient_ = std::move(ambient);
  f.subs_ = std::move(members);
  f.opt_ = opt;
  return f;
}

IndexedFamily IndexedFamily::from_cones(std::vector<std::string> labels,
                                        std::vector<PolyhedralCone> members, FamilyOptions opt) {
  if (labels.empty()) throw invalid_input("family needs at least one member");
  if (labels.size() != members.size()) throw invalid_input("labels and members differ in count");
  if (labels.size() > opt.max_index_set) throw guard_exceeded("family exceeds index-set guard");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    throw invalid_input("duplicate member labels");
  for (const PolyhedralCone& c : members)
    if (c.dim != members[0].dim) throw invalid_input("cone members disagree on dimension");
  IndexedFamily f;
  f.labels_ = std::move(labels);
  f.cone_backend_ = true;
  f.dim_ = members.empty() ? 0 : members[0].dim;
  f.cones_ = std::move(members);
  f.opt_ = opt;
  return f;
}

int IndexedFamily::cone_dim() const {
  if (!cone_backend_) throw invalid_input("not a cone family");
  return dim_;
}

const ComplexPtr& IndexedFamily::ambient() const {
  if (cone_backend_) throw invalid_input("not a subcomplex family");
  return ambient_;
}

const Subcomplex& IndexedFamily::subcomplex_member(size_t i) const {
  if (cone_backend_) throw invalid_input("not a subcomplex family");
  return subs_.at(i);
}

const PolyhedralCone& IndexedFamily::cone_member(size_t i) const {
  if (!cone_backend_) throw invalid_input("not a cone family");
  return cones_.at(i);
}

HomologyProfile intersection_profile(const IndexedFamily& f, const ThetaSet& theta) {
  validate_theta(f, theta);
  if (f.cone_backend()) {
    bool nonempty = cone_nonempty(intersect_cones(cone_subfamily(f, theta))).has_value();
    return nonempty ? contractible_profile() : empty_space_profile();
  }
  return reduced_homology(fold_intersection(f, theta));
}

HomologyProfile union_profile(const IndexedFamily& f, const ThetaSet& theta) {
  validate_theta(f, theta);
  if (f.cone_backend()) return reduced_homology(build_nerve(cone_subfamily(f, theta)));
  return reduced_homology(fold_union(f, theta));
}

SimplicialComplex family_nerve(const IndexedFamily& f, const ThetaSet& theta) {
  validate_theta(f, theta);
  if (f.cone_backend()) {
    // build_nerve numbers vertices by position; renumber to member indices.
    SimplicialComplex local = build_nerve(cone_subfamily(f, theta));
    std::vector<Simplex> renamed;
    for (Simplex s : local.simplices()) {
      for (Vertex& v : s) v = Vertex(theta[size_t(v)]);
      renamed.push_back(std::move(s));
    }
    return SimplicialComplex::from_simplices(std::move(renamed));
  }

  std::set<Simplex, SimplexOrder> simplices;
  std::vector<Simplex> frontier;
  for (size_t i : theta)
    if (!f.subcomplex_member(i).empty()) {
      simplices.insert({Vertex(i)});
      frontier.push_back({Vertex(i)});
    }
  for (size_t size = 2; size <= theta.size() && !frontier.empty(); ++size) {
    std::vector<Simplex> next;
    for (const Simplex& s : frontier) {
      for (size_t i : theta) {
        Vertex v = Vertex(i);
        if (v <= s.back()) continue;
        Simplex cand = s;
        cand.push_back(v);
        bool facets_in = true;
        for (size_t drop = 0; facets_in && drop < cand.size(); ++drop) {
          Simplex facet;
          for (size_t j = 0; j < cand.size(); ++j)
            if (j != drop) facet.push_back(cand[j]);
          facets_in = simplices.count(facet) > 0;
        }
        if (!facets_in) continue;
        ThetaSet sub;
        for (Vertex w : cand) sub.push_back(size_t(w));
        if (!fold_intersection(f, sub).empty()) {
          simplices.insert(cand);
          next.push_back(cand);
        }
      }
    }
    frontier = std::move(next);
  }
  return SimplicialComplex::from_simplices({simplices.begin(), simplices.end()});
}

SimplicialComplex family_nerve(const IndexedFamily& f) {
  ThetaSet all(f.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  return family_nerve(f, all);
}

ConditionReport check_condition(const IndexedFamily& f, char which, int k) {
  if (which != 'A' && which != 'B') throw invalid_input("condition must be A or B");
  if (k < 0) throw invalid_input("condition level must be nonnegative");

  ConditionReport r;
  r.condition = which;
  r.k = k;
  r.holds = true;
  foreach_theta_lex(f.size(), size_t(k) + 1, [&](const ThetaSet& theta) {
    HomologyProfile p =
        which == 'A' ? intersection_profile(f, theta) : union_profile(f, theta);
    if (!p.is_acyclic()) {
      r.holds = false;
      r.witness_theta = theta;
      r.witness_profile = std::move(p);
      return false;
    }
    return true;
  });
  return r;
}

DualityReport verify_duality(const IndexedFamily& f, const ThetaSet& theta) {
  validate_theta(f, theta);
  if (theta.size() < 2) throw invalid_input("duality needs a subfamily of at least 2 members");

  DualityReport r;
  r.theta = theta;
  r.k = int(theta.size()) - 1;

  // Hypothesis A_{k-1} inside theta: all proper-size subsets (<= k members).
  r.hypothesis_met = true;
  ThetaSet sigma;
  auto rec = [&](auto&& self, size_t from) -> bool {
    for (size_t i = from; i < theta.size(); ++i) {
      sigma.push_back(theta[i]);
      if (!intersection_profile(f, sigma).is_acyclic()) {
        r.hypothesis_met = false;
        r.hypothesis_witness = sigma;
        return false;
      }
      if (sigma.size() < size_t(r.k))
        if (!self(self, i + 1)) return false;
      sigma.pop_back();
    }
    return true;
  };
  rec(rec, 0);

  r.union_profile = union_profile(f, theta);
  r.intersection_profile = intersection_profile(f, theta);
  if (r.hypothesis_met) {
    r.shift_matches = graded_equal_shifted(r.union_profile, r.intersection_profile, r.k);
    if (f.options().self_test_mode && !*r.shift_matches)
      throw inconsistency_error("duality shift failed under verified hypothesis");
  }
  return r;
}

EquivalenceReport condition_equivalence(const IndexedFamily& f, int k) {
  EquivalenceReport r;
  r.a = check_condition(f, 'A', k);
  r.b = check_condition(f, 'B', k);
  r.agree = r.a.holds == r.b.holds;
  if (f.options().self_test_mode && !r.agree)
    throw inconsistency_error("conditions A and B disagree");
  return r;
}

IntersectionUnionReport intersection_union_equivalence(const IndexedFamily& f) {
  const size_t k = f.size();
  if (k < 2) throw invalid_input("needs at least 2 members");

  IntersectionUnionReport r;
  ConditionReport a = check_condition(f, 'A', int(k) - 1);
  ConditionReport b = check_condition(f, 'B', int(k) - 1);
  r.all_intersections_acyclic = a.holds;
  r.intersection_witness = a.witness_theta;
  r.all_unions_acyclic = b.holds;
  r.union_witness = b.witness_theta;
  r.first_clause_agree = a.holds == b.holds;
  if (f.options().self_test_mode && !r.first_clause_agree)
    throw inconsistency_error("intersection/union equivalence failed");

  if (f.cone_backend()) {
    ThetaSet all(k);
    for (size_t i = 0; i < k; ++i) all[i] = i;
    r.total_intersection_acyclic =
        cone_nonempty(intersect_cones(cone_subfamily(f, all))).has_value();
    int j = std::min(f.cone_dim(), int(k) - 2);
    r.union_acyclic_and_bounded =
        union_profile(f, all).is_acyclic() && check_condition(f, 'B', j).holds;
    r.second_clause_agree = *r.total_intersection_acyclic == *r.union_acyclic_and_bounded;
  }
  return r;
}

NonemptyIntersectionReport nonempty_intersection_criterion(const IndexedFamily& f) {
  NonemptyIntersectionReport r;

  if (f.cone_backend()) {
    r.precondition_met = true;  // nonempty cone intersections are contractible
  } else {
    r.precondition_met = true;
    foreach_theta_lex(f.size(), f.size(), [&](const ThetaSet& theta) {
      HomologyProfile p = intersection_profile(f, theta);
      if (p.minus_one_rank == 0 && !p.is_acyclic()) {
        r.precondition_met = false;
        r.precondition_witness = theta;
        return false;
      }
      return true;
    });
    if (!r.precondition_met) return r;  // refuse: no claim either way
  }

  ThetaSet all(f.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (f.cone_backend()) {
    auto w = cone_nonempty(intersect_cones(cone_subfamily(f, all)));
    r.total_nonempty = w.has_value();
    if (w) r.point_witness = std::move(*w);
  } else {
    Subcomplex total = fold_intersection(f, all);
    r.total_nonempty = !total.empty();
    if (r.total_nonempty) r.simplex_witness = total.simplices().front();
  }

  r.all_unions_acyclic = true;
  foreach_theta_lex(f.size(), f.size(), [&](const ThetaSet& theta) {
    if (!union_profile(f, theta).is_acyclic()) {
      r.all_unions_acyclic = false;
      r.union_witness = theta;
      return false;
    }
    return true;
  });

  r.agree = r.total_nonempty == r.all_unions_acyclic;
  if (f.options().self_test_mode && !r.agree)
    throw inconsistency_error("nonempty-intersection criterion failed");
  return r;
}

BoundReport dimension_bound_check(const IndexedFamily& f, std::optional<int> declared_n) {
  BoundReport r;
  if (f.cone_backend()) {
    r.n = declared_n.value_or(f.cone_dim());
  } else {
    if (!declared_n)
      throw invalid_input("subcomplex families need a declared ambient dimension");
    r.n = *declared_n;
  }
  if (r.n < 0) throw invalid_input("ambient dimension must be nonnegative");

  ConditionReport hyp = check_condition(f, 'A', r.n);
  r.hypothesis_met = hyp.holds;
  r.hypothesis_witness = hyp.witness_theta;
  if (!r.hypothesis_met) return r;  // hypothesis not met: no claim

  r.conclusions_hold = true;
  const int top = int(f.size()) - 1;
  for (int k = 0; k <= top && r.conclusions_hold; ++k) {
    if (!check_condition(f, 'A', k).holds) {
      r.conclusions_hold = false;
      r.failure_note = "A_" + std::to_string(k) + " fails despite A_n";
    } else if (!check_condition(f, 'B', k).holds) {
      r.conclusions_hold = false;
      r.failure_note = "B_" + std::to_string(k) + " fails despite A_n";
    }
  }
  if (r.conclusions_hold) {
    ThetaSet all(f.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    bool nonempty = f.cone_backend()
                        ? cone_nonempty(intersect_cones(cone_subfamily(f, all))).has_value()
                        : !fold_intersection(f, all).empty();
    if (!nonempty) {
      r.conclusions_hold = false;
      r.failure_note = "total intersection empty despite A_n";
    }
  }
  if (f.options().self_test_mode && !r.conclusions_hold)
    throw inconsistency_error("dimension bound violated: " + *r.failure_note);
  return r;
}

}  // namespace conetop
