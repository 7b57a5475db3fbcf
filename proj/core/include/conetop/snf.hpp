#pragma once

#include <vector>

#include "conetop/matrix.hpp"

namespace conetop {

// Invariant factors of an integer matrix.
//   - invariant_factors has exactly min(rows, cols) entries, all >= 0;
//   - each nonzero factor divides the next; zeros trail;
//   - rank = number of nonzero factors.
struct SnfResult {
  std::vector<Int> invariant_factors;
  int rank = 0;

  bool operator==(const SnfResult&) const = default;
};

SnfResult smith_normal_form(const IntMatrix& m);

// Verbose variant keeps the unimodular change-of-basis pair:
// u * m * v == diag(invariant_factors), det(u), det(v) in {+1, -1}.
struct SnfVerbose {
  SnfResult result;
  IntMatrix u;  // rows x rows
  IntMatrix v;  // cols x cols
};

SnfVerbose smith_normal_form_verbose(const IntMatrix& m);

// dim ker(m) as a map of free abelian groups = cols - rank.
int kernel_rank(const IntMatrix& m);

}  // namespace conetop
