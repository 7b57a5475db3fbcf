#include "conetop/matrix.hpp"

namespace conetop {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rat_rank(RatMatrix m) { return int(rref(m).size()); }

std::vector<RatVec> rat_kernel_basis(RatMatrix m) {
  const int n = m.cols();
  std::vector<int> pivots = rref(m);

  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVec x(n, Rat(0));
    x[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m.at(int(r), free);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace conetop
