#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "conetop/errors.hpp"

namespace conetop {

// Arbitrary-precision integers and rationals.  Rationals are kept in lowest
// terms with positive denominator (mpq canonical form); no rounding anywhere.
using Int = mpz_class;
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p", or "p/q".  Used by every JSON surface.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw invalid_input("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw invalid_input("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw invalid_input("rational with zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

// Serializes as "p" or "p/q" (denominator omitted when 1).
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw invalid_input("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vec(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace conetop
