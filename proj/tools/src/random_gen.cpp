#include "random_gen.hpp"

#include <algorithm>
#include <string>

#include "conetop/matrix.hpp"

namespace conetop::gen {

namespace {

Rat rq(long x) { return Rat(x); }

RatVec random_vec(RandomSource& rs, int n, long lo, long hi) {
  RatVec v;
  for (int j = 0; j < n; ++j) v.emplace_back(rs.range(lo, hi));
  return v;
}

RatVec random_nonzero_vec(RandomSource& rs, int n, long lo, long hi) {
  for (;;) {
    RatVec v = random_vec(rs, n, lo, hi);
    if (!is_zero_vec(v)) return v;
  }
}

bool solid_generators(const ConeGenerators& g) {
  if (g.generators.empty()) return false;
  RatMatrix m(int(g.generators.size()), g.dim);
  for (size_t i = 0; i < g.generators.size(); ++i)
    for (int j = 0; j < g.dim; ++j) m.at(int(i), j) = g.generators[i][size_t(j)];
  return rat_rank(m) == g.dim;
}

std::vector<Simplex> maximal_simplices(const SimplicialComplex& c) {
  std::vector<Simplex> out;
  const auto& all = c.simplices();
  for (const Simplex& s : all) {
    bool is_face = false;
    for (const Simplex& t : all) {
      if (t.size() <= s.size()) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        is_face = true;
        break;
      }
    }
    if (!is_face) out.push_back(s);
  }
  return out;
}

}  // namespace

ComplexPtr random_complex(RandomSource& rs) {
  for (;;) {
    long pool = rs.range(1, 8);
    long m = rs.range(1, 6);
    std::vector<Simplex> maximal;
    for (long i = 0; i < m; ++i) {
      long size = rs.range(1, std::min<long>(4, pool));
      Simplex s;
      while (long(s.size()) < size) {
        Vertex v = Vertex(rs.range(0, pool - 1));
        if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
      }
      std::sort(s.begin(), s.end());
      maximal.push_back(std::move(s));
    }
    auto c = SimplicialComplex::from_maximal(maximal);
    if (c.size() <= 40) return std::make_shared<SimplicialComplex>(std::move(c));
  }
}

IndexedFamily random_subcomplex_family(RandomSource& rs, size_t max_index_set) {
  ComplexPtr ambient = random_complex(rs);
  long k = rs.range(2, 6);
  std::vector<std::string> labels;
  std::vector<Subcomplex> members;
  for (long i = 0; i < k; ++i) {
    labels.push_back("m" + std::to_string(i + 1));
    if (rs.chance(1, 2)) {
      // Full subcomplex on a random vertex subset (possibly empty).
      std::vector<Vertex> picked;
      for (Vertex v : ambient->vertices())
        if (rs.chance(1, 2)) picked.push_back(v);
      members.push_back(full_subcomplex(ambient, picked));
    } else {
      // Face closure of a few random simplices.
      std::vector<Simplex> seed;
      long take = rs.range(0, 4);
      for (long t = 0; t < take; ++t)
        seed.push_back(ambient->simplices()[size_t(rs.range(0, long(ambient->size()) - 1))]);
      members.emplace_back(ambient, seed);
    }
  }
  FamilyOptions opt;
  opt.max_index_set = max_index_set;
  return IndexedFamily::from_subcomplexes(ambient, std::move(labels), std::move(members), opt);
}

IndexedFamily random_cone_family(RandomSource& rs, size_t max_index_set) {
  int dim = int(rs.range(1, 3));
  long k = rs.range(2, 6);
  std::vector<std::string> labels;
  std::vector<PolyhedralCone> members;
  for (long i = 0; i < k; ++i) {
    labels.push_back("c" + std::to_string(i + 1));
    if (rs.chance(1, 4)) {
      // Dual-form member; needs a solid generated cone.
      for (;;) {
        std::vector<RatVec> gens;
        long g = rs.range(dim, dim + 2);
        for (long t = 0; t < g; ++t) gens.push_back(random_nonzero_vec(rs, dim, -2, 2));
        auto made = make_generators(dim, gens);
        if (!solid_generators(made)) continue;
        members.push_back(strict_dual(made));
        break;
      }
    } else {
      std::vector<RatVec> weak, strict;
      long nw = rs.range(0, 3), ns = rs.range(0, 1);
      for (long t = 0; t < nw; ++t) weak.push_back(random_vec(rs, dim, -2, 2));
      for (long t = 0; t < ns; ++t) strict.push_back(random_vec(rs, dim, -2, 2));
      members.push_back(make_cone(dim, std::move(weak), std::move(strict), rs.chance(1, 4)));
    }
  }
  FamilyOptions opt;
  opt.max_index_set = max_index_set;
  return IndexedFamily::from_cones(std::move(labels), std::move(members), opt);
}

ConvexPolytopeFamily random_polytope_family(RandomSource& rs, size_t max_index_set) {
  int dim = int(rs.range(1, 3));
  long m = rs.range(dim + 1, 8);
  bool anchored = rs.chance(1, 2);
  RatVec center = random_vec(rs, dim, -2, 2);

  std::vector<std::string> labels;
  std::vector<Polytope> members;
  for (long i = 0; i < m; ++i) {
    labels.push_back("p" + std::to_string(i + 1));
    Polytope p;
    long rows = rs.range(1, 4);
    for (long r = 0; r < rows; ++r) {
      RatVec a = random_vec(rs, dim, -3, 3);
      if (anchored) {
        p.b.push_back(dot(a, center) + rq(rs.range(0, 2)));
      } else {
        p.b.push_back(rq(rs.range(-3, 3)));
      }
      p.a.push_back(std::move(a));
    }
    members.push_back(std::move(p));
  }
  return make_polytope_family(dim, std::move(labels), std::move(members), max_index_set);
}

RegularCover random_regular_cover(RandomSource& rs, size_t max_index_set) {
  int dim = int(rs.range(1, 3));
  long levels = rs.range(1, 2);

  Simplex top;
  for (int v = 0; v <= dim; ++v) top.push_back(v);
  ComplexPtr base = std::make_shared<SimplicialComplex>(SimplicialComplex::from_maximal({top}));

  SubdivisionMap sd = identity_subdivision(base);
  for (long i = 0; i < levels; ++i) sd = compose(sd, barycentric_subdivision(sd.source));

  // Any assignment that sends each simplex to a vertex of its own carrier
  // yields a regular cover; randomize within that freedom, then re-check.
  for (;;) {
    std::map<Vertex, std::vector<Simplex>> blocks;
    for (Vertex v : base->vertices()) blocks[v] = {};
    for (const Simplex& s : sd.source->simplices()) {
      Simplex car = sd.carrier(s);
      blocks[car[size_t(rs.range(0, long(car.size()) - 1))]].push_back(s);
    }
    std::map<Vertex, Subcomplex> sets;
    for (auto& [alpha, block] : blocks) sets.emplace(alpha, Subcomplex(sd.source, block));
    RegularCover rc = make_regular_cover(sd, std::move(sets), max_index_set);
    if (is_regular_cover(rc).regular) return rc;
    // Construction argument says this never triggers; resampling keeps the
    // generator honest if it ever does.
  }
}

Economy random_economy(RandomSource& rs, size_t max_index_set) {
  int n = int(rs.range(2, 3));
  long h = rs.range(2, 6);

  auto random_utility = [&]() -> Utility {
    for (;;) {
      long kind = rs.range(0, 2);
      if (kind == 0) return LinearUtility{random_nonzero_vec(rs, n, -2, 2)};
      if (kind == 1) {
        std::vector<RatVec> rows;
        long m = rs.range(1, 3);
        for (long i = 0; i < m; ++i) rows.push_back(random_nonzero_vec(rs, n, -2, 2));
        if (cone_nonempty(make_cone(n, {}, rows))) return MinLinearUtility{std::move(rows)};
        continue;  // bounded-type, resample
      }
      std::vector<RatVec> rows;
      long m = rs.range(0, 2);
      for (long i = 0; i < m; ++i) rows.push_back(random_nonzero_vec(rs, n, -2, 2));
      auto gens = cone_generators(n, rows);
      if (gens.generators.empty() || !solid_generators(gens)) continue;
      return ExplicitConeUtility{std::move(gens)};
    }
  };

  std::vector<Trader> traders;
  for (long i = 0; i < h; ++i)
    traders.push_back(Trader{"t" + std::to_string(i + 1),
                             random_nonzero_vec(rs, n, -2, 2), random_utility()});
  return make_economy(n, std::move(traders), max_index_set);
}

WeakSystem random_weak_system(RandomSource& rs, int max_vars) {
  int vars = int(rs.range(1, max_vars));
  int rows = int(rs.range(0, 6));
  WeakSystem s{RatMatrix(rows, vars), {}};
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < vars; ++j) s.a.at(i, j) = rq(rs.range(-3, 3));
    s.b.push_back(rq(rs.range(-3, 3)));
  }
  return s;
}

IndexedFamily random_facet_family(RandomSource& rs, size_t max_index_set) {
  for (;;) {
    ComplexPtr ambient = random_complex(rs);
    std::vector<Simplex> facets = maximal_simplices(*ambient);
    if (facets.size() > 6) continue;

    std::vector<std::string> labels;
    std::vector<Subcomplex> members;
    for (size_t i = 0; i < facets.size(); ++i) {
      labels.push_back("f" + std::to_string(i + 1));
      members.push_back(full_subcomplex(ambient, facets[i]));
    }
    FamilyOptions opt;
    opt.max_index_set = max_index_set;
    return IndexedFamily::from_subcomplexes(ambient, std::move(labels), std::move(members), opt);
  }
}

}  // namespace conetop::gen
