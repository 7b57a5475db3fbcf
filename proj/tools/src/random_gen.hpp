#pragma once

#include <cstdint>
#include <random>

#include "conetop/covers.hpp"
#include "conetop/economy.hpp"
#include "conetop/families.hpp"

namespace conetop::gen {

// Deterministic random source.  mt19937_64 is bit-stable everywhere; the
// uniform draw is hand-rolled (modulo) because the standard distributions
// are implementation-defined and would break byte-identical reports.  The
// slight modulo bias is irrelevant for test-instance generation.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed) : eng_(seed) {}

  long range(long lo, long hi) {  // inclusive bounds
    return lo + long(eng_() % uint64_t(hi - lo + 1));
  }
  bool chance(long num, long den) { return range(1, den) <= num; }

 private:
  std::mt19937_64 eng_;
};

// Nonempty complex on a small vertex pool, at most 40 simplices.
ComplexPtr random_complex(RandomSource& rs);

// Subcomplex-backend family over a random ambient complex, 2..6 members
// mixing full subcomplexes and face closures of random simplex picks.
IndexedFamily random_subcomplex_family(RandomSource& rs, size_t max_index_set = 16);

// Cone-backend family in dimension 1..3, 2..6 members, mixing H-form cones
// (weak/strict rows, occasional origin exclusion) and strict duals.
IndexedFamily random_cone_family(RandomSource& rs, size_t max_index_set = 16);

// Polytope family in dimension 1..3 with dim+1..8 members; about half the
// instances are built around a common point so the Helly hypothesis has a
// real chance to hold.
ConvexPolytopeFamily random_polytope_family(RandomSource& rs, size_t max_index_set = 16);

// Regular cover of a full simplex of dimension 1..3 under 1..2 barycentric
// levels: the closest-vertex cover with random carrier-respecting
// reassignments, re-validated after mutation.
RegularCover random_regular_cover(RandomSource& rs, size_t max_index_set = 16);

// Economy with 2 or 3 goods and 2..6 traders drawing all three utility
// forms; min-linear draws are resampled until the strict cone is nonempty,
// explicit closures until solid.
Economy random_economy(RandomSource& rs, size_t max_index_set = 16);

// Random weak system a x >= b for the LP-vs-elimination cross-check.
struct WeakSystem {
  RatMatrix a;
  RatVec b;
};
WeakSystem random_weak_system(RandomSource& rs, int max_vars = 6);

// Family whose members are the full subcomplexes on the facets of a random
// complex: every subfamily intersection is a full simplex or empty, so the
// nerve computes the union's homology exactly.
IndexedFamily random_facet_family(RandomSource& rs, size_t max_index_set = 16);

}  // namespace conetop::gen
