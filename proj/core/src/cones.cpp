#include "conetop/cones.hpp"

#include <algorithm>
#include <set>

namespace conetop {

namespace {

void check_rows(int dim, const std::vector<RatVec>& rows, const char* what) {
  for (const RatVec& r : rows)
    if (int(r.size()) != dim) throw invalid_input(std::string(what) + ": row length != dim");
}

// Primitive integer representative of the ray through v (direction kept).
RatVec primitive(RatVec v) {
  Int scale = 1;
  for (const Rat& x : v) scale = lcm(scale, Int(x.get_den()));
  Int g = 0;
  for (Rat& x : v) {
    x *= scale;
    g = gcd(g, Int(x.get_num()));
  }
  if (g > 1)
    for (Rat& x : v) x /= g;
  return v;
}

RatVec negated(RatVec v) {
  for (Rat& x : v) x = -x;
  return v;
}

RatMatrix stack_rows(int dim, const std::vector<RatVec>& rows) {
  RatMatrix m(int(rows.size()), dim);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < dim; ++j) m.at(int(i), j) = rows[i][j];
  return m;
}

std::optional<RatVec> solve_scaled(const std::vector<RatVec>& weak,
                                   const std::vector<RatVec>& ones, int dim) {
  RatMatrix a(int(weak.size() + ones.size()), dim);
  RatVec b(weak.size() + ones.size(), Rat(0));
  int r = 0;
  for (const RatVec& row : weak) {
    for (int j = 0; j < dim; ++j) a.at(r, j) = row[j];
    ++r;
  }
  for (const RatVec& row : ones) {
    for (int j = 0; j < dim; ++j) a.at(r, j) = row[j];
    b[size_t(r)] = 1;
    ++r;
  }
  return feasible_weak(a, b);
}

}  // namespace

PolyhedralCone make_cone(int dim, std::vector<RatVec> weak, std::vector<RatVec> strict,
                         bool exclude_origin) {
  if (dim < 1) throw invalid_input("cone dimension must be positive");
  check_rows(dim, weak, "weak");
  check_rows(dim, strict, "strict");
  return PolyhedralCone{dim, std::move(weak), std::move(strict), exclude_origin};
}

ConeGenerators make_generators(int dim, std::vector<RatVec> generators) {
  if (dim < 1) throw invalid_input("cone dimension must be positive");
  check_rows(dim, generators, "generators");
  for (const RatVec& g : generators)
    if (is_zero_vec(g)) throw invalid_input("zero generator");
  return ConeGenerators{dim, std::move(generators)};
}

bool cone_contains(const PolyhedralCone& c, const RatVec& x) {
  if (int(x.size()) != c.dim) return false;
  for (const RatVec& r : c.weak)
    if (dot(r, x) < 0) return false;
  for (const RatVec& r : c.strict)
    if (dot(r, x) <= 0) return false;
  if (c.exclude_origin && is_zero_vec(x)) return false;
  return true;
}

std::optional<RatVec> cone_nonempty(const PolyhedralCone& c) {
  check_rows(c.dim, c.weak, "weak");
  check_rows(c.dim, c.strict, "strict");

  auto accept = [&](RatVec x) -> RatVec {
    RatVec doubled = x;
    for (Rat& v : doubled) v *= 2;
    if (!cone_contains(c, x) || !cone_contains(c, doubled))
      throw inconsistency_error("cone witness fails re-verification");
    return x;
  };

  if (!c.strict.empty()) {
    // s.x > 0 becomes s.x >= 1: any strict point scales into the system.
    auto x = solve_scaled(c.weak, c.strict, c.dim);
    if (!x) return std::nullopt;
    return accept(*x);
  }

  if (!c.exclude_origin) return accept(RatVec(size_t(c.dim), Rat(0)));

  // A weak cone holds a nonzero point iff it holds one with some coordinate
  // scaled to +-1; probe directions in the fixed order +e1, -e1, +e2, ...
  for (int i = 0; i < c.dim; ++i) {
    for (int sign : {1, -1}) {
      RatVec e(size_t(c.dim), Rat(0));
      e[size_t(i)] = sign;
      auto x = solve_scaled(c.weak, {e}, c.dim);
      if (x) return accept(*x);
    }
  }
  return std::nullopt;
}

PolyhedralCone intersect_cones(const std::vector<PolyhedralCone>& cs) {
  if (cs.empty()) throw invalid_input("intersect_cones: no cones");
  PolyhedralCone out;
  out.dim = cs[0].dim;
  for (const PolyhedralCone& c : cs) {
    if (c.dim != out.dim) throw invalid_input("intersect_cones: dimension mismatch");
    out.weak.insert(out.weak.end(), c.weak.begin(), c.weak.end());
    out.strict.insert(out.strict.end(), c.strict.begin(), c.strict.end());
    out.exclude_origin = out.exclude_origin || c.exclude_origin;
  }
  return out;
}

PolyhedralCone strict_dual(const ConeGenerators& g) {
  if (rat_rank(stack_rows(g.dim, g.generators)) != g.dim)
    throw invalid_input("market cone derivation requires solid asymptotic cone");
  return make_cone(g.dim, g.generators, {}, true);
}

ConeGenerators cone_generators(int dim, const std::vector<RatVec>& weak_rows) {
  if (dim < 1) throw invalid_input("cone dimension must be positive");
  check_rows(dim, weak_rows, "weak");
  if (weak_rows.size() > 16) throw guard_exceeded("cone_generators: too many rows");

  std::set<RatVec> out;
  std::vector<RatVec> lineality = rat_kernel_basis(stack_rows(dim, weak_rows));
  for (const RatVec& l : lineality) {
    RatVec p = primitive(l);
    out.insert(p);
    out.insert(negated(p));
  }

  if (int(lineality.size()) < dim) {
    // Extreme rays of the pointed part C intersected with the orthogonal
    // complement of the lineality space: every one lies in the kernel of a
    // row subset of corank 1 (together with the lineality equalities).
    const size_t m = weak_rows.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<RatVec> rows = lineality;
      for (size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) rows.push_back(weak_rows[i]);
      std::vector<RatVec> null = rat_kernel_basis(stack_rows(dim, rows));
      if (null.size() != 1) continue;
      RatVec v = primitive(null[0]);
      auto inside = [&](const RatVec& x) {
        for (const RatVec& r : weak_rows)
          if (dot(r, x) < 0) return false;
        return true;
      };
      if (inside(v))
        out.insert(v);
      else if (RatVec w = negated(v); inside(w))
        out.insert(w);
    }
  }

  ConeGenerators g;
  g.dim = dim;
  g.generators.assign(out.begin(), out.end());
  return g;
}

std::vector<RatVec> facet_normals(const ConeGenerators& g) {
  if (rat_rank(stack_rows(g.dim, g.generators)) != g.dim)
    throw invalid_input("facet_normals: generators do not span");
  if (g.generators.size() > 16) throw guard_exceeded("facet_normals: too many generators");

  std::set<RatVec> out;
  const size_t m = g.generators.size();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<RatVec> rows;
    for (size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) rows.push_back(g.generators[i]);
    std::vector<RatVec> null = rat_kernel_basis(stack_rows(g.dim, rows));
    if (null.size() != 1) continue;
    RatVec f = primitive(null[0]);
    bool pos = false, neg = false;
    for (const RatVec& v : g.generators) {
      Rat d = dot(f, v);
      if (d > 0) pos = true;
      if (d < 0) neg = true;
    }
    if (pos && neg) continue;  // not a supporting hyperplane
    out.insert(neg ? negated(f) : f);
  }
  return {out.begin(), out.end()};
}

SimplicialComplex build_nerve(const std::vector<PolyhedralCone>& cones, size_t max_members) {
  if (cones.size() > max_members) throw guard_exceeded("build_nerve: too many members");
  const int m = int(cones.size());
  for (const PolyhedralCone& c : cones)
    if (c.dim != cones[0].dim) throw invalid_input("build_nerve: dimension mismatch");

  std::set<Simplex, SimplexOrder> simplices;
  std::vector<Vertex> present;
  for (int i = 0; i < m; ++i)
    if (cone_nonempty(cones[i])) {
      simplices.insert({i});
      present.push_back(i);
    }

  // Monotone expansion: a subset is tested only once all its facets are in.
  std::vector<Simplex> frontier;
  for (Vertex v : present) frontier.push_back({v});
  for (size_t size = 2; size <= present.size() && !frontier.empty(); ++size) {
    std::vector<Simplex> next;
    std::set<Simplex, SimplexOrder> seen;
    for (const Simplex& s : frontier) {
      for (Vertex v : present) {
        if (v <= s.back()) continue;
        Simplex cand = s;
        cand.push_back(v);
        if (!seen.insert(cand).second) continue;
        bool facets_in = true;
        for (size_t drop = 0; facets_in && drop < cand.size(); ++drop) {
          Simplex f;
          for (size_t i = 0; i < cand.size(); ++i)
            if (i != drop) f.push_back(cand[i]);
          facets_in = simplices.count(f) > 0;
        }
        if (!facets_in) continue;
        std::vector<PolyhedralCone> sub;
        for (Vertex v2 : cand) sub.push_back(cones[size_t(v2)]);
        if (cone_nonempty(intersect_cones(sub))) {
          simplices.insert(cand);
          next.push_back(cand);
        }
      }
    }
    frontier = std::move(next);
  }

  // from_simplices revalidates downward closure.
  return SimplicialComplex::from_simplices({simplices.begin(), simplices.end()});
}

}  // namespace conetop
