#pragma once

#include <optional>

#include "conetop/matrix.hpp"

namespace conetop {

// Decides whether { x : a x >= b } is nonempty over the rationals and, if so,
// returns a witness.  Exact phase-1 simplex with Bland's rule; no rounding,
// no cycling.  Variables are free (split internally into differences of
// nonnegatives).  Throws invalid_input on a.rows() != b.size().
std::optional<RatVec> feasible_weak(const RatMatrix& a, const RatVec& b);

// Independent feasibility oracle for the same system a x >= b, by variable
// elimination.  Deliberately shares no code with feasible_weak so the two
// can cross-check each other.  Intended for small systems; refuses more
// than 8 variables.
bool fourier_motzkin_feasible(const RatMatrix& a, const RatVec& b);

// Exact check that a candidate satisfies a x >= b; used to re-verify every
// witness before it is reported.
bool satisfies_weak(const RatMatrix& a, const RatVec& b, const RatVec& x);

}  // namespace conetop
