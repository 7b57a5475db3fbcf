#include <doctest.h>

#include <algorithm>
#include <random>

#include "conetop/homology.hpp"
#include "conetop/simplicial.hpp"

using namespace conetop;

static ComplexPtr cx(const std::vector<Simplex>& maximal) {
  return std::make_shared<SimplicialComplex>(SimplicialComplex::from_maximal(maximal));
}

// ---------------------------------------------------------------------------
// Construction.
// ---------------------------------------------------------------------------

TEST_CASE("from_maximal: closure and counts") {
  // Two triangles glued along an edge: 4 + 5 + 2 simplices.
  auto c = cx({{0, 1, 2}, {1, 2, 3}});
  CHECK(c->size() == 11);
  CHECK(c->vertices() == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(c->dim() == 2);
  CHECK(c->contains({1, 2}));
  CHECK(!c->contains({0, 3}));

  CHECK(cx({})->empty());
  CHECK(cx({})->dim() == -1);

  // Unsorted input is normalized; repeated vertices are rejected.
  CHECK(cx({{2, 0, 1}})->contains({0, 1, 2}));
  CHECK_THROWS_AS(SimplicialComplex::from_maximal({{1, 1}}), invalid_input);
  CHECK_THROWS_AS(SimplicialComplex::from_maximal({{}}), invalid_input);
}

TEST_CASE("from_simplices validates closure") {
  CHECK_THROWS_AS(SimplicialComplex::from_simplices({{0, 1}}), invalid_input);
  auto c = SimplicialComplex::from_simplices({{0}, {1}, {0, 1}});
  CHECK(c.size() == 3);
}

TEST_CASE("canonical simplex order is (dimension, lex)") {
  auto c = cx({{0, 1}, {2}});
  std::vector<Simplex> want{{0}, {1}, {2}, {0, 1}};
  CHECK(c->simplices() == want);
}

// ---------------------------------------------------------------------------
// Reduced homology golden values.
// ---------------------------------------------------------------------------

TEST_CASE("homology: empty complex has one unit in degree -1") {
  auto p = reduced_homology(*cx({}));
  CHECK(p.minus_one_rank == 1);
  CHECK(p.betti.empty());
  CHECK(p.torsion.empty());
  CHECK(!p.is_acyclic());
}

TEST_CASE("homology: a point is acyclic") {
  auto p = reduced_homology(*cx({{7}}));
  CHECK(p.minus_one_rank == 0);
  CHECK(p.betti.empty());
  CHECK(p.is_acyclic());
}

TEST_CASE("homology: two points") {
  auto p = reduced_homology(*cx({{0}, {1}}));
  CHECK(p.minus_one_rank == 0);
  CHECK(p.betti_at(0) == 1);
  CHECK(!p.is_acyclic());
}

TEST_CASE("homology: hollow triangle is a circle") {
  // Boundary matrix rank 2 by hand: betti_0 = 3-1-2 = 0, betti_1 = 1.
  auto p = reduced_homology(*cx({{0, 1}, {1, 2}, {0, 2}}));
  CHECK(p.minus_one_rank == 0);
  CHECK(p.betti_at(0) == 0);
  CHECK(p.betti_at(1) == 1);
  CHECK(p.torsion.empty());
}

TEST_CASE("homology: solid triangle is acyclic") {
  CHECK(reduced_homology(*cx({{0, 1, 2}})).is_acyclic());
}

TEST_CASE("homology: boundary of a tetrahedron is a 2-sphere") {
  auto p = reduced_homology(*cx({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  CHECK(p.betti_at(0) == 0);
  CHECK(p.betti_at(1) == 0);
  CHECK(p.betti_at(2) == 1);
  CHECK(p.torsion.empty());
}

TEST_CASE("homology: 6-vertex projective plane has 2-torsion") {
  // Closed surface: 6 vertices, 15 edges, 10 triangles, every edge in two
  // triangles, Euler characteristic 1.  H_1 = Z/2, everything else zero.
  auto c = cx({{1, 2, 3},
               {1, 3, 4},
               {1, 4, 5},
               {1, 5, 6},
               {1, 2, 6},
               {2, 3, 5},
               {3, 4, 6},
               {2, 4, 5},
               {3, 5, 6},
               {2, 4, 6}});
  CHECK(c->size() == 31);
  auto p = reduced_homology(*c);
  CHECK(p.minus_one_rank == 0);
  CHECK(p.betti.empty());
  REQUIRE(p.torsion.count(1) == 1);
  CHECK(p.torsion_at(1) == std::vector<Int>{2});
  CHECK(!p.is_acyclic());  // torsion blocks acyclicity
}

TEST_CASE("homology: wedge-like union keeps both circles") {
  // Two hollow triangles sharing one vertex: betti_1 = 2.
  auto p = reduced_homology(*cx({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}));
  CHECK(p.betti_at(0) == 0);
  CHECK(p.betti_at(1) == 2);
}

// ---------------------------------------------------------------------------
// Stars, full subcomplexes, union/intersection.
// ---------------------------------------------------------------------------

TEST_CASE("open star is not face-closed; closed star is its closure") {
  auto path = cx({{0, 1}, {1, 2}});
  auto open = open_star(*path, 1);
  std::vector<Simplex> want{{1}, {0, 1}, {1, 2}};
  std::sort(open.begin(), open.end(), SimplexOrder{});
  CHECK(open == want);

  auto closed = closed_star(path, 1);
  CHECK(closed.simplices().size() == 5);  // whole path
  CHECK(closed.contains({0}));
}

TEST_CASE("full subcomplex") {
  auto square = cx({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  auto edge = full_subcomplex(square, {1, 2});
  CHECK(edge.simplices().size() == 3);
  auto diag = full_subcomplex(square, {1, 3});
  CHECK(diag.simplices().size() == 2);  // two bare vertices
  CHECK(full_subcomplex(square, {}).empty());
  CHECK_THROWS_AS(full_subcomplex(square, {9}), invalid_input);
}

TEST_CASE("union and intersection of arcs of a square") {
  auto square = cx({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  Subcomplex top(square, {{1, 2}, {2, 3}});
  Subcomplex bottom(square, {{3, 4}, {1, 4}});

  auto meet = intersect_sub(top, bottom);
  auto join = union_sub(top, bottom);
  CHECK(reduced_homology(meet).betti_at(0) == 1);  // two antipodal vertices
  CHECK(reduced_homology(join).betti_at(1) == 1);  // the whole circle

  auto other = cx({{1, 2}});
  Subcomplex foreign(other, {{1, 2}});
  CHECK_THROWS_AS(union_sub(top, foreign), invalid_input);
}

TEST_CASE("subcomplex validates membership") {
  auto square = cx({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK_THROWS_AS(Subcomplex(square, {{1, 3}}), invalid_input);
  // Input is face-closed automatically.
  Subcomplex s(square, {{1, 2}});
  CHECK(s.simplices().size() == 3);
}

// ---------------------------------------------------------------------------
// Barycentric subdivision.
// ---------------------------------------------------------------------------

TEST_CASE("subdivision of an edge is a two-edge path") {
  auto edge = cx({{0, 1}});
  auto sd = barycentric_subdivision(edge);
  CHECK(sd.source->size() == 5);
  CHECK(sd.source->vertices().size() == 3);
  CHECK(sd.target == edge);

  // Carriers: two endpoints carry the original vertices, the middle vertex
  // carries the edge.
  int vertex_carriers = 0, edge_carriers = 0;
  for (const auto& [v, f] : sd.vertex_carrier)
    (f.size() == 1 ? vertex_carriers : edge_carriers)++;
  CHECK(vertex_carriers == 2);
  CHECK(edge_carriers == 1);
}

TEST_CASE("subdivision of a solid triangle: 7 vertices, 12 edges, 6 triangles") {
  auto sd = barycentric_subdivision(cx({{0, 1, 2}}));
  int by_dim[3] = {0, 0, 0};
  for (const auto& s : sd.source->simplices()) by_dim[s.size() - 1]++;
  CHECK(by_dim[0] == 7);
  CHECK(by_dim[1] == 12);
  CHECK(by_dim[2] == 6);
  CHECK(reduced_homology(*sd.source).is_acyclic());
}

TEST_CASE("subdivision of the empty complex is empty") {
  auto sd = barycentric_subdivision(cx({}));
  CHECK(sd.source->empty());
}

TEST_CASE("carriers are monotone and composition works") {
  auto c = cx({{0, 1, 2}, {2, 3}});
  auto sd1 = barycentric_subdivision(c);
  auto sd2 = barycentric_subdivision(sd1.source);
  auto sd = compose(sd1, sd2);
  CHECK(sd.source == sd2.source);
  CHECK(sd.target == c);

  for (const auto& s : sd.source->simplices()) {
    Simplex car = sd.carrier(s);
    CHECK(c->contains(car));
    // Faces have carriers inside the carrier of the whole simplex.
    for (size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      if (face.empty()) continue;
      Simplex fc = sd.carrier(face);
      CHECK(std::includes(car.begin(), car.end(), fc.begin(), fc.end()));
    }
  }
}

TEST_CASE("subdivision preserves reduced homology") {
  std::mt19937_64 eng(4242);
  auto rnd = [&](int lo, int hi) { return int(lo + eng() % (hi - lo + 1)); };

  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Simplex> maximal;
    int nv = rnd(3, 6), ns = rnd(2, 6);
    for (int s = 0; s < ns; ++s) {
      Simplex sx;
      int k = rnd(1, 3);
      while (int(sx.size()) < k) {
        Vertex v = rnd(0, nv - 1);
        if (std::find(sx.begin(), sx.end(), v) == sx.end()) sx.push_back(v);
      }
      std::sort(sx.begin(), sx.end());
      maximal.push_back(sx);
    }
    auto c = cx(maximal);
    auto sd = barycentric_subdivision(c);
    CHECK(reduced_homology(*c) == reduced_homology(*sd.source));
  }
}

TEST_CASE("a cone is always acyclic") {
  std::mt19937_64 eng(555);
  auto rnd = [&](int lo, int hi) { return int(lo + eng() % (hi - lo + 1)); };

  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Simplex> maximal;
    int nv = rnd(2, 5), ns = rnd(1, 5);
    for (int s = 0; s < ns; ++s) {
      Simplex sx;
      int k = rnd(1, std::min(3, nv));
      while (int(sx.size()) < k) {
        Vertex v = rnd(0, nv - 1);
        if (std::find(sx.begin(), sx.end(), v) == sx.end()) sx.push_back(v);
      }
      std::sort(sx.begin(), sx.end());
      sx.push_back(nv);  // apex joins every maximal simplex
      maximal.push_back(sx);
    }
    CHECK(reduced_homology(*cx(maximal)).is_acyclic());
  }
}

// ---------------------------------------------------------------------------
// Graded comparison with shift.
// ---------------------------------------------------------------------------

TEST_CASE("graded_equal_shifted handles the degree -1 slot") {
  auto circle = reduced_homology(*cx({{0, 1}, {1, 2}, {0, 2}}));
  auto two_points = reduced_homology(*cx({{0}, {1}}));
  CHECK(graded_equal_shifted(circle, two_points, 1));

  auto empty = reduced_homology(*cx({}));
  auto one_point = reduced_homology(*cx({{0}}));
  // H_0(two points) = Z = H_{-1}(empty set), all else zero.
  CHECK(graded_equal_shifted(two_points, empty, 1));
  CHECK(!graded_equal_shifted(one_point, empty, 1));
  CHECK(graded_equal_shifted(circle, circle, 0));
  CHECK(!graded_equal_shifted(circle, two_points, 0));
}

TEST_CASE("euler characteristic identity") {
  std::mt19937_64 eng(99);
  auto rnd = [&](int lo, int hi) { return int(lo + eng() % (hi - lo + 1)); };

  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Simplex> maximal;
    int nv = rnd(2, 7), ns = rnd(1, 7);
    for (int s = 0; s < ns; ++s) {
      Simplex sx;
      int k = rnd(1, std::min(4, nv));
      while (int(sx.size()) < k) {
        Vertex v = rnd(0, nv - 1);
        if (std::find(sx.begin(), sx.end(), v) == sx.end()) sx.push_back(v);
      }
      std::sort(sx.begin(), sx.end());
      maximal.push_back(sx);
    }
    auto c = cx(maximal);
    auto p = reduced_homology(*c);

    long chi_f = -1;  // augmentation
    for (const auto& s : c->simplices()) chi_f += (s.size() % 2 == 1) ? 1 : -1;
    long chi_b = -long(p.minus_one_rank);
    for (const auto& [q, r] : p.betti) chi_b += (q % 2 == 0) ? r : -r;
    CHECK(chi_f == chi_b);
  }
}
