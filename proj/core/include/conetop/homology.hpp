#pragma once

#include <map>

#include "conetop/simplicial.hpp"
#include "conetop/snf.hpp"

namespace conetop {

// Reduced integral homology, computed over the augmented chain complex
//   ... -> C_1 -> C_0 -> Z -> 0
// so the empty complex has one degree of homology in dimension -1 and a
// single point has none at all.  Zero entries are omitted from the maps.
struct HomologyProfile {
  int minus_one_rank = 0;                   // 1 iff the complex is empty
  std::map<int, int> betti;                 // q >= 0, nonzero ranks only
  std::map<int, std::vector<Int>> torsion;  // q >= 0, invariant factors > 1

  int betti_at(int q) const {
    auto it = betti.find(q);
    return it == betti.end() ? 0 : it->second;
  }
  std::vector<Int> torsion_at(int q) const {
    auto it = torsion.find(q);
    return it == torsion.end() ? std::vector<Int>{} : it->second;
  }

  // Acyclic = nonempty with all reduced homology zero (torsion included).
  bool is_acyclic() const { return minus_one_rank == 0 && betti.empty() && torsion.empty(); }

  bool operator==(const HomologyProfile&) const = default;
};

HomologyProfile reduced_homology(const SimplicialComplex& c);
HomologyProfile reduced_homology(const Subcomplex& s);

bool is_acyclic(const SimplicialComplex& c);
bool is_acyclic(const Subcomplex& s);

// True iff H_q(left) == H_{q-shift}(right) for every q, reading the rank of
// H_{-1} from minus_one_rank and treating degrees below -1 as zero.
bool graded_equal_shifted(const HomologyProfile& left, const HomologyProfile& right, int shift);

}  // namespace conetop
