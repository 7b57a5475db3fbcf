// Microbenchmarks for the hot paths: integer Smith normal form, homology of
// subdivided complexes, exact LP feasibility, nerve construction, and the
// full market-condition check.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "conetop/cones.hpp"
#include "conetop/economy.hpp"
#include "conetop/families.hpp"
#include "conetop/homology.hpp"
#include "conetop/lp.hpp"
#include "conetop/simplicial.hpp"
#include "conetop/snf.hpp"

namespace {

using namespace conetop;

// Deterministic pseudo-random integers without <random> distribution
// variance across libraries.
struct Lcg {
  uint64_t s = 0x2545F4914F6CDD1DULL;
  long next(long lo, long hi) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + long((s >> 33) % uint64_t(hi - lo + 1));
  }
};

IntMatrix dense_int_matrix(int rows, int cols) {
  Lcg g;
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Int(g.next(-9, 9));
  return m;
}

void bm_smith_normal_form(benchmark::State& state) {
  const int n = int(state.range(0));
  IntMatrix m = dense_int_matrix(n, n + 4);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(bm_smith_normal_form)->Arg(8)->Arg(16)->Arg(24);

void bm_subdivided_homology(benchmark::State& state) {
  ComplexPtr tri = std::make_shared<SimplicialComplex>(
      SimplicialComplex::from_maximal({{0, 1, 2}}));
  SubdivisionMap sd = barycentric_subdivision(tri);
  for (int level = 1; level < state.range(0); ++level)
    sd = compose(sd, barycentric_subdivision(sd.source));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(*sd.source));
}
BENCHMARK(bm_subdivided_homology)->Arg(1)->Arg(2);

void bm_lp_feasible_weak(benchmark::State& state) {
  Lcg g;
  const int rows = int(state.range(0));
  RatMatrix a(rows, 6);
  auto b = RatVec(size_t(rows));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < 6; ++j) a.at(i, j) = Rat(g.next(-3, 3));
    b[size_t(i)] = Rat(g.next(-3, 3));
  }
  for (auto _ : state) benchmark::DoNotOptimize(feasible_weak(a, b));
}
BENCHMARK(bm_lp_feasible_weak)->Arg(6)->Arg(12)->Arg(24);

void bm_cone_nerve(benchmark::State& state) {
  // Six sectors around the plane; every pair of neighbours meets.
  std::vector<RatVec> dirs = {{Rat(1), Rat(0)},  {Rat(1), Rat(1)},  {Rat(0), Rat(1)},
                              {Rat(-1), Rat(1)}, {Rat(-1), Rat(0)}, {Rat(-1), Rat(-1)}};
  std::vector<std::string> labels;
  std::vector<PolyhedralCone> cones;
  for (size_t i = 0; i < dirs.size(); ++i) {
    labels.push_back("s" + std::to_string(i));
    cones.push_back(
        strict_dual(make_generators(2, {dirs[i], dirs[(i + 1) % dirs.size()]})));
  }
  IndexedFamily f = IndexedFamily::from_cones(labels, cones);
  for (auto _ : state) benchmark::DoNotOptimize(family_nerve(f));
}
BENCHMARK(bm_cone_nerve);

void bm_theorem11_check(benchmark::State& state) {
  // Three traders whose market cones meet pairwise but not jointly.
  auto trader = [](std::string id, std::vector<RatVec> gens) {
    return Trader{std::move(id), {Rat(1), Rat(1)},
                  ExplicitConeUtility{make_generators(2, std::move(gens))}};
  };
  Economy e = make_economy(2, {trader("t1", {{Rat(0), Rat(1)}, {Rat(1), Rat(1)}}),
                               trader("t2", {{Rat(-3), Rat(1)}, {Rat(-2), Rat(-1)}}),
                               trader("t3", {{Rat(1), Rat(-6)}, {Rat(5), Rat(-2)}})});
  for (auto _ : state) benchmark::DoNotOptimize(theorem11_check(e));
}
BENCHMARK(bm_theorem11_check);

}  // namespace

BENCHMARK_MAIN();
