#include "conetop/homology.hpp"

#include <algorithm>

namespace conetop {

namespace {

// Simplices of each dimension occupy one contiguous slice of the canonical
// order.  Returns, per dimension q >= 0, the [begin, end) index pair.
std::vector<std::pair<size_t, size_t>> dimension_slices(const std::vector<Simplex>& simplices) {
  std::vector<std::pair<size_t, size_t>> slices;
  size_t i = 0;
  while (i < simplices.size()) {
    size_t j = i;
    while (j < simplices.size() && simplices[j].size() == simplices[i].size()) ++j;
    slices.emplace_back(i, j);
    i = j;
  }
  return slices;
}

// Boundary matrix of the augmented complex from dimension q to q-1.
// Rows index (q-1)-simplices (one synthetic row for q == 0), columns index
// q-simplices; entries are the usual alternating signs.
IntMatrix boundary_matrix(const std::vector<Simplex>& simplices,
                          const std::vector<std::pair<size_t, size_t>>& slices, int q) {
  const auto [cb, ce] = slices[size_t(q)];
  const size_t ncols = ce - cb;
  if (q == 0) {
    IntMatrix m(1, int(ncols));
    for (size_t c = 0; c < ncols; ++c) m.at(0, int(c)) = 1;
    return m;
  }
  const auto [rb, re] = slices[size_t(q) - 1];
  IntMatrix m(int(re - rb), int(ncols));
  for (size_t c = 0; c < ncols; ++c) {
    const Simplex& s = simplices[cb + c];
    int sign = 1;
    for (size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      auto it = std::lower_bound(simplices.begin() + rb, simplices.begin() + re, f);
      m.at(int(it - (simplices.begin() + rb)), int(c)) = sign;
      sign = -sign;
    }
  }
  return m;
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& c) {
  HomologyProfile h;
  if (c.empty()) {
    h.minus_one_rank = 1;
    return h;
  }

  const auto& simplices = c.simplices();
  auto slices = dimension_slices(simplices);
  const int top = int(slices.size()) - 1;  // = dim(c)

  // rank_d[q] = rank of the boundary map C_q -> C_{q-1}; torsion of H_{q-1}
  // is read off the same Smith form.  The augmentation C_0 -> Z is q == 0.
  std::vector<int> rank_d(size_t(top) + 2, 0);
  for (int q = 0; q <= top; ++q) {
    SnfResult snf = smith_normal_form(boundary_matrix(simplices, slices, q));
    rank_d[size_t(q)] = snf.rank;
    std::vector<Int> tors;
    for (const Int& f : snf.invariant_factors)
      if (f > 1) tors.push_back(f);
    if (!tors.empty()) h.torsion[q - 1] = std::move(tors);
  }

  long chi_direct = 0;
  for (int q = 0; q <= top; ++q) {
    const auto [b, e] = slices[size_t(q)];
    const int n_q = int(e - b);
    const int betti = n_q - rank_d[size_t(q)] - rank_d[size_t(q) + 1];
    if (betti < 0) throw inconsistency_error("negative homology rank");
    if (betti > 0) h.betti[q] = betti;
    chi_direct += (q % 2 == 0 ? 1L : -1L) * n_q;
  }

  // Euler characteristic cross-check; the +1 is the augmentation (H_{-1}
  // vanishes for a nonempty complex, unreduced b_0 = reduced b_0 + 1).
  long chi_betti = 1;
  for (const auto& [q, b] : h.betti) chi_betti += (q % 2 == 0 ? 1L : -1L) * b;
  if (chi_direct != chi_betti) throw inconsistency_error("Euler characteristic mismatch");

  return h;
}

HomologyProfile reduced_homology(const Subcomplex& s) { return reduced_homology(s.as_complex()); }

bool is_acyclic(const SimplicialComplex& c) { return reduced_homology(c).is_acyclic(); }
bool is_acyclic(const Subcomplex& s) { return reduced_homology(s).is_acyclic(); }

bool graded_equal_shifted(const HomologyProfile& left, const HomologyProfile& right, int shift) {
  auto left_betti = [&](int q) { return q == -1 ? left.minus_one_rank : (q < -1 ? 0 : left.betti_at(q)); };
  auto right_betti = [&](int q) { return q == -1 ? right.minus_one_rank : (q < -1 ? 0 : right.betti_at(q)); };
  auto left_tors = [&](int q) { return q < 0 ? std::vector<Int>{} : left.torsion_at(q); };
  auto right_tors = [&](int q) { return q < 0 ? std::vector<Int>{} : right.torsion_at(q); };

  // The degree -1 slots sit at q = -1 (left) and q = shift - 1 (right);
  // both bounds must cover them.
  int hi = std::max(-1, shift - 1);
  for (const auto& [q, b] : left.betti) hi = std::max(hi, q);
  for (const auto& [q, t] : left.torsion) hi = std::max(hi, q);
  for (const auto& [q, b] : right.betti) hi = std::max(hi, q + shift);
  for (const auto& [q, t] : right.torsion) hi = std::max(hi, q + shift);
  int lo = std::min(-1, shift - 1);

  for (int q = lo; q <= hi; ++q) {
    if (left_betti(q) != right_betti(q - shift)) return false;
    if (left_tors(q) != right_tors(q - shift)) return false;
  }
  return true;
}

}  // namespace conetop
