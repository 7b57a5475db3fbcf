#include "conetop/covers.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "conetop/families.hpp"

namespace conetop {

namespace {

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_subdivision(const SubdivisionMap& sd, const char* what) {
  if (!sd.source || !sd.target)
    throw invalid_input(std::string(what) + ": subdivision is incomplete");
}

// Nonempty subsets of {0..n-1} in lexicographic DFS order ((0), (0,1),
// (0,1,2), (0,2), (1), ...).  Returning false stops the walk.
template <typename F>
bool foreach_subset_lex(size_t n, F&& visit) {
  std::vector<size_t> theta;
  auto rec = [&](auto&& self, size_t from) -> bool {
    for (size_t i = from; i < n; ++i) {
      theta.push_back(i);
      if (!visit(theta)) return false;
      if (!self(self, i + 1)) return false;
      theta.pop_back();
    }
    return true;
  };
  return rec(rec, 0);
}

// Size-r subsets of {0..n-1} in lexicographic order.
template <typename F>
bool foreach_subset_of_size(size_t n, size_t r, F&& visit) {
  std::vector<size_t> pick;
  auto rec = [&](auto&& self, size_t from) -> bool {
    if (pick.size() == r) return visit(pick);
    for (size_t i = from; i + (r - pick.size()) <= n; ++i) {
      pick.push_back(i);
      if (!self(self, i + 1)) return false;
      pick.pop_back();
    }
    return true;
  };
  return rec(rec, 0);
}

size_t position_in(const std::vector<Vertex>& sorted, Vertex v) {
  return size_t(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

// Nerve over the sorted index set s by monotone expansion: a candidate
// subset is tested only once all its facets are in, so the nonemptiness
// predicate runs on few subsets.  Valid because intersections only shrink.
template <typename Meets>
std::vector<Simplex> monotone_nerve(const std::vector<Vertex>& s, Meets&& meets) {
  std::set<std::vector<size_t>> present;
  std::vector<std::vector<size_t>> frontier;
  for (size_t p = 0; p < s.size(); ++p)
    if (meets(std::vector<size_t>{p})) {
      present.insert({p});
      frontier.push_back({p});
    }
  while (!frontier.empty()) {
    std::vector<std::vector<size_t>> next;
    for (const auto& base : frontier)
      for (size_t p = base.back() + 1; p < s.size(); ++p) {
        std::vector<size_t> cand = base;
        cand.push_back(p);
        bool facets_in = true;
        for (size_t drop = 0; facets_in && drop + 1 < cand.size(); ++drop) {
          std::vector<size_t> facet;
          for (size_t j = 0; j < cand.size(); ++j)
            if (j != drop) facet.push_back(cand[j]);
          facets_in = present.count(facet) > 0;
        }
        if (facets_in && meets(cand)) {
          present.insert(cand);
          next.push_back(cand);
        }
      }
    frontier = std::move(next);
  }
  std::vector<Simplex> out;
  for (const auto& pos : present) {
    Simplex t;
    for (size_t p : pos) t.push_back(s[p]);
    out.push_back(std::move(t));
  }
  return out;
}

// The precondition arity for a family of k sets whose union has the given
// dimension: k-1 by default, n+1 when that is smaller.
size_t criterion_arity(size_t k, int union_dim, bool* used_dimension_bound) {
  size_t base = k - 1;
  size_t alt = size_t(std::max(0, union_dim + 1));
  *used_dimension_bound = alt < base;
  return std::min(base, alt);
}

}  // namespace

RegularCover make_regular_cover(SubdivisionMap subdivision, std::map<Vertex, Subcomplex> sets,
                                size_t max_index_set) {
  require_subdivision(subdivision, "regular cover");
  const std::vector<Vertex>& s = subdivision.target->vertices();
  if (sets.size() != s.size())
    throw invalid_input("regular cover: need exactly one closed set per vertex of X");
  std::set<Simplex, SimplexOrder> covered;
  for (const auto& [alpha, c] : sets) {
    if (!std::binary_search(s.begin(), s.end(), alpha))
      throw invalid_input("regular cover: set index is not a vertex of X");
    if (!same_complex(c.parent(), subdivision.source))
      throw invalid_input("regular cover: set does not live in the subdivision");
    covered.insert(c.simplices().begin(), c.simplices().end());
  }
  if (covered.size() != subdivision.source->size())
    throw invalid_input("regular cover: sets do not cover the subdivision");
  return {std::move(subdivision), std::move(sets), max_index_set};
}

SimpleCover make_simple_cover(SubdivisionMap subdivision,
                              std::map<Vertex, std::vector<Vertex>> star_sets,
                              size_t max_index_set) {
  require_subdivision(subdivision, "simple cover");
  const std::vector<Vertex>& s = subdivision.target->vertices();
  const std::vector<Vertex>& fine = subdivision.source->vertices();
  if (star_sets.size() != s.size())
    throw invalid_input("simple cover: need exactly one star set per vertex of X");
  std::set<Vertex> centered;
  for (auto& [alpha, w] : star_sets) {
    if (!std::binary_search(s.begin(), s.end(), alpha))
      throw invalid_input("simple cover: set index is not a vertex of X");
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    for (Vertex v : w)
      if (!std::binary_search(fine.begin(), fine.end(), v))
        throw invalid_input("simple cover: star center is not a vertex of the subdivision");
    centered.insert(w.begin(), w.end());
  }
  // Open vertex stars cover the space exactly when every vertex is a center.
  if (centered.size() != fine.size())
    throw invalid_input("simple cover: open stars do not cover the space");
  return {std::move(subdivision), std::move(star_sets), max_index_set};
}

Subcomplex subdivision_image(const SubdivisionMap& sd, const Subcomplex& of_target) {
  require_subdivision(sd, "subdivision image");
  if (!same_complex(of_target.parent(), sd.target))
    throw invalid_input("subdivision image: subcomplex does not live in the target complex");
  std::vector<Simplex> kept;
  for (const Simplex& s : sd.source->simplices())
    if (of_target.contains(sd.carrier(s))) kept.push_back(s);
  return Subcomplex(sd.source, kept);
}

RegularityReport is_regular_cover(const RegularCover& rc) {
  const std::vector<Vertex>& s = rc.subdivision.target->vertices();
  if (s.size() > rc.max_index_set || s.size() > 24)
    throw guard_exceeded("regular cover index set exceeds the enumeration guard");
  const std::vector<Simplex>& fine = rc.subdivision.source->simplices();

  // Bit p of a mask names vertex s[p].  carrier[i] holds the carrier
  // vertices of fine simplex i, owner[i] the sets containing it.
  std::vector<uint32_t> carrier(fine.size(), 0), owner(fine.size(), 0);
  for (size_t i = 0; i < fine.size(); ++i)
    for (Vertex v : rc.subdivision.carrier(fine[i]))
      carrier[i] |= uint32_t(1) << position_in(s, v);
  for (const auto& [alpha, c] : rc.sets) {
    uint32_t bit = uint32_t(1) << position_in(s, alpha);
    for (const Simplex& t : c.simplices()) {
      size_t i = size_t(std::lower_bound(fine.begin(), fine.end(), t, SimplexOrder{}) -
                        fine.begin());
      owner[i] |= bit;
    }
  }

  RegularityReport rep;
  rep.regular = true;
  foreach_subset_lex(s.size(), [&](const std::vector<size_t>& theta) {
    uint32_t m = 0;
    for (size_t p : theta) m |= uint32_t(1) << p;
    for (size_t i = 0; i < fine.size(); ++i)
      if ((carrier[i] & ~m) == 0 && (owner[i] & m) == 0) {
        std::vector<Vertex> witness;
        for (size_t p : theta) witness.push_back(s[p]);
        rep.regular = false;
        rep.witness_theta = std::move(witness);
        return false;
      }
    return true;
  });
  return rep;
}

SimplicityReport is_simple_cover(const SimpleCover& sc) {
  for (const auto& [alpha, w] : sc.star_sets)
    for (Vertex center : w) {
      Subcomplex star = closed_star(sc.subdivision.source, center);
      for (const Simplex& t : star.simplices()) {
        Simplex car = sc.subdivision.carrier(t);
        if (!std::binary_search(car.begin(), car.end(), alpha)) return {false, alpha};
      }
    }
  return {true, {}};
}

bool nerve_matches_complex(const RegularCover& rc) {
  if (!is_regular_cover(rc).regular)
    throw invalid_input("nerve check: cover fails its regularity check");
  const std::vector<Vertex>& s = rc.subdivision.target->vertices();
  auto meets = [&](const std::vector<size_t>& theta) {
    Subcomplex acc = rc.sets.at(s[theta[0]]);
    for (size_t j = 1; j < theta.size() && !acc.empty(); ++j)
      acc = intersect_sub(acc, rc.sets.at(s[theta[j]]));
    return !acc.empty();
  };
  SimplicialComplex nerve = SimplicialComplex::from_simplices(monotone_nerve(s, meets));
  return nerve == *rc.subdivision.target;
}

bool nerve_matches_complex(const SimpleCover& sc) {
  if (!is_simple_cover(sc).simple)
    throw invalid_input("nerve check: cover fails its simplicity check");
  const std::vector<Vertex>& s = sc.subdivision.target->vertices();
  const std::vector<Simplex>& fine = sc.subdivision.source->simplices();

  // A point interior to a fine simplex lies in U_alpha exactly when the
  // simplex has a vertex in W_alpha, so set intersections decide the nerve.
  std::vector<std::vector<size_t>> touches(s.size());
  for (size_t p = 0; p < s.size(); ++p) {
    const std::vector<Vertex>& w = sc.star_sets.at(s[p]);
    for (size_t i = 0; i < fine.size(); ++i)
      for (Vertex v : fine[i])
        if (std::binary_search(w.begin(), w.end(), v)) {
          touches[p].push_back(i);
          break;
        }
  }
  auto meets = [&](const std::vector<size_t>& theta) {
    std::vector<size_t> acc = touches[theta[0]];
    for (size_t j = 1; j < theta.size() && !acc.empty(); ++j) {
      std::vector<size_t> tmp;
      std::set_intersection(acc.begin(), acc.end(), touches[theta[j]].begin(),
                            touches[theta[j]].end(), std::back_inserter(tmp));
      acc = std::move(tmp);
    }
    return !acc.empty();
  };
  SimplicialComplex nerve = SimplicialComplex::from_simplices(monotone_nerve(s, meets));
  return nerve == *sc.subdivision.target;
}

Simplex kkm_check(const RegularCover& rc) {
  const SimplicialComplex& x = *rc.subdivision.target;
  if (x.empty() || x != SimplicialComplex::from_maximal({x.vertices()}))
    throw invalid_input("kkm check: base complex must be one full simplex");
  if (!is_regular_cover(rc).regular) throw invalid_input("kkm check: cover is not regular");

  auto it = rc.sets.begin();
  Subcomplex acc = it->second;
  for (++it; it != rc.sets.end() && !acc.empty(); ++it) acc = intersect_sub(acc, it->second);
  if (acc.empty())
    throw inconsistency_error("regular cover of a simplex has empty total intersection");
  return acc.simplices().front();
}

RegularCover closest_vertex_cover(const SubdivisionMap& sd) {
  require_subdivision(sd, "closest-vertex cover");
  // Assign every fine simplex to the least vertex of the carrier of its
  // least vertex.  That vertex lies in the simplex's own carrier, so the
  // blocks pass the regularity check by construction.
  std::map<Vertex, std::vector<Simplex>> block;
  for (Vertex alpha : sd.target->vertices()) block[alpha];
  for (const Simplex& s : sd.source->simplices())
    block[sd.vertex_carrier.at(s.front()).front()].push_back(s);
  std::map<Vertex, Subcomplex> sets;
  for (auto& [alpha, simplices] : block) sets.emplace(alpha, Subcomplex(sd.source, simplices));
  return make_regular_cover(sd, std::move(sets));
}

SimpleCover star_refinement_cover(ComplexPtr x) {
  if (!x) throw invalid_input("star refinement: null complex");
  SubdivisionMap once = barycentric_subdivision(x);
  SubdivisionMap twice = barycentric_subdivision(once.source);
  SubdivisionMap whole = compose(once, twice);

  // A vertex of the double subdivision names a chain of faces of X; its
  // closed star only reaches faces comparable with that chain, all of which
  // contain the smallest link.  Sending the vertex to the least vertex of
  // that smallest face therefore keeps every closure inside a star.
  std::map<Vertex, std::vector<Vertex>> star_sets;
  for (Vertex alpha : x->vertices()) star_sets[alpha];
  for (Vertex v : whole.source->vertices()) {
    const Simplex& chain = twice.vertex_carrier.at(v);
    const Simplex& smallest = once.vertex_carrier.at(chain.front());
    star_sets[smallest.front()].push_back(v);
  }
  return make_simple_cover(whole, std::move(star_sets));
}

ConvexPolytopeFamily make_polytope_family(int dim, std::vector<std::string> labels,
                                          std::vector<Polytope> members, size_t max_index_set) {
  if (dim < 1) throw invalid_input("polytope family: dimension must be positive");
  if (members.empty()) throw invalid_input("polytope family: no members");
  if (labels.size() != members.size())
    throw invalid_input("polytope family: need exactly one label per member");
  if (members.size() > max_index_set)
    throw guard_exceeded("polytope family exceeds the enumeration guard");
  std::set<std::string> seen;
  for (const std::string& l : labels) {
    if (l.empty()) throw invalid_input("polytope family: empty label");
    if (!seen.insert(l).second) throw invalid_input("polytope family: duplicate label");
  }
  for (const Polytope& p : members) {
    if (p.a.size() != p.b.size())
      throw invalid_input("polytope family: inequality row/bound count mismatch");
    for (const RatVec& row : p.a)
      if (int(row.size()) != dim) throw invalid_input("polytope family: row length != dim");
  }
  return {dim, std::move(labels), std::move(members), max_index_set};
}

std::optional<RatVec> polytope_intersection_point(const ConvexPolytopeFamily& f,
                                                  const std::vector<size_t>& subset) {
  if (subset.empty()) throw invalid_input("empty polytope subfamily");
  if (!std::is_sorted(subset.begin(), subset.end()) ||
      std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw invalid_input("subfamily indices must be sorted and distinct");
  if (subset.back() >= f.members.size()) throw invalid_input("subfamily index out of range");

  // a x <= b fed to the weak solver as (-a) x >= -b.
  std::vector<RatVec> rows;
  RatVec rhs;
  for (size_t i : subset) {
    const Polytope& p = f.members[i];
    for (size_t r = 0; r < p.a.size(); ++r) {
      RatVec neg(size_t(f.dim));
      for (size_t j = 0; j < size_t(f.dim); ++j) neg[j] = -p.a[r][j];
      rows.push_back(std::move(neg));
      rhs.push_back(-p.b[r]);
    }
  }
  RatMatrix m = RatMatrix::from_rows(rows, f.dim);
  std::optional<RatVec> x = feasible_weak(m, rhs);
  if (x && !satisfies_weak(m, rhs, *x))
    throw inconsistency_error("polytope witness fails re-verification");
  return x;
}

HellyReport helly_check(const ConvexPolytopeFamily& f) {
  HellyReport rep;
  rep.subfamily_size = size_t(f.dim) + 1;
  if (f.members.size() < rep.subfamily_size)
    throw invalid_input("helly check needs at least dim+1 members");

  rep.hypothesis_met = true;
  foreach_subset_of_size(f.members.size(), rep.subfamily_size,
                         [&](const std::vector<size_t>& pick) {
                           if (polytope_intersection_point(f, pick)) return true;
                           rep.hypothesis_met = false;
                           rep.hypothesis_witness = pick;
                           return false;
                         });
  if (!rep.hypothesis_met) return rep;

  std::vector<size_t> all(f.members.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::optional<RatVec> x = polytope_intersection_point(f, all);
  if (!x)
    throw inconsistency_error(
        "convex family meets the intersection hypothesis but has empty total intersection");
  rep.total_nonempty = true;
  rep.point_witness = std::move(x);
  return rep;
}

IntersectionCriterionReport simple_family_intersection_criterion(const IndexedFamily& f) {
  if (f.cone_backend()) throw invalid_input("simple-family criterion needs subcomplex members");
  size_t k = f.size();
  if (k < 2) throw invalid_input("intersection criterion needs at least two sets");

  IntersectionCriterionReport rep;
  rep.family_size = k;

  Subcomplex uni = f.subcomplex_member(0);
  for (size_t i = 1; i < k; ++i) uni = union_sub(uni, f.subcomplex_member(i));
  SimplicialComplex uni_c = uni.as_complex();
  rep.union_profile = reduced_homology(uni_c);
  rep.union_acyclic = rep.union_profile.is_acyclic();

  rep.precondition_arity = criterion_arity(k, uni_c.dim(), &rep.used_dimension_bound);
  rep.precondition_met = true;
  if (rep.precondition_arity > 0)
    foreach_subset_of_size(k, rep.precondition_arity, [&](const std::vector<size_t>& pick) {
      Subcomplex acc = f.subcomplex_member(pick[0]);
      for (size_t j = 1; j < pick.size() && !acc.empty(); ++j)
        acc = intersect_sub(acc, f.subcomplex_member(pick[j]));
      if (!acc.empty()) return true;
      rep.precondition_met = false;
      rep.empty_subfamily = pick;
      return false;
    });

  Subcomplex total = f.subcomplex_member(0);
  for (size_t i = 1; i < k && !total.empty(); ++i)
    total = intersect_sub(total, f.subcomplex_member(i));
  rep.total_nonempty = !total.empty();
  if (rep.total_nonempty) rep.simplex_witness = total.simplices().front();

  if (rep.precondition_met) rep.criterion_holds = rep.total_nonempty == rep.union_acyclic;
  return rep;
}

IntersectionCriterionReport closed_family_intersection_criterion(const RegularCover& rc) {
  const std::vector<Vertex>& s = rc.subdivision.target->vertices();
  size_t k = s.size();
  if (k < 2) throw invalid_input("intersection criterion needs at least two sets");

  IntersectionCriterionReport rep;
  rep.family_size = k;

  RegularityReport reg = is_regular_cover(rc);
  if (!reg.regular) rep.regularity_witness = reg.witness_theta;

  // The sets cover X', so the union side is the homology of X' itself.
  rep.union_profile = reduced_homology(*rc.subdivision.source);
  rep.union_acyclic = rep.union_profile.is_acyclic();

  rep.precondition_arity =
      criterion_arity(k, rc.subdivision.source->dim(), &rep.used_dimension_bound);
  bool wise_nonempty = true;
  if (rep.precondition_arity > 0)
    foreach_subset_of_size(k, rep.precondition_arity, [&](const std::vector<size_t>& pick) {
      Subcomplex acc = rc.sets.at(s[pick[0]]);
      for (size_t j = 1; j < pick.size() && !acc.empty(); ++j)
        acc = intersect_sub(acc, rc.sets.at(s[pick[j]]));
      if (!acc.empty()) return true;
      wise_nonempty = false;
      rep.empty_subfamily = pick;
      return false;
    });
  rep.precondition_met = reg.regular && wise_nonempty;

  Subcomplex total = rc.sets.at(s[0]);
  for (size_t i = 1; i < k && !total.empty(); ++i) total = intersect_sub(total, rc.sets.at(s[i]));
  rep.total_nonempty = !total.empty();
  if (rep.total_nonempty) rep.simplex_witness = total.simplices().front();

  if (rep.precondition_met) rep.criterion_holds = rep.total_nonempty == rep.union_acyclic;
  return rep;
}

}  // namespace conetop
