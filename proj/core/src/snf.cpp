#include "conetop/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace conetop {

namespace {

// Mutable elimination state.  Row operations mirror into *u, column
// operations into *v (either may be null), preserving a == u_ops(m) * v_ops,
// i.e. u * m * v stays equal to the current working matrix.
struct Work {
  IntMatrix a;
  IntMatrix* u;
  IntMatrix* v;

  int rows() const { return a.rows(); }
  int cols() const { return a.cols(); }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    if (u)
      for (int c = 0; c < u->cols(); ++c) std::swap(u->at(i, c), u->at(j, c));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    if (v)
      for (int r = 0; r < v->rows(); ++r) std::swap(v->at(r, i), v->at(r, j));
  }

  // row dst += q * row src
  void row_axpy(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < a.cols(); ++c) a.at(dst, c) += q * a.at(src, c);
    if (u)
      for (int c = 0; c < u->cols(); ++c) u->at(dst, c) += q * u->at(src, c);
  }

  // col dst += q * col src
  void col_axpy(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < a.rows(); ++r) a.at(r, dst) += q * a.at(r, src);
    if (v)
      for (int r = 0; r < v->rows(); ++r) v->at(r, dst) += q * v->at(r, src);
  }

  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    if (u)
      for (int c = 0; c < u->cols(); ++c) u->at(i, c) = -u->at(i, c);
  }
};

// Smallest-|entry| nonzero in a[t.., t..]; ties broken by (row, col).
bool find_pivot(const Work& w, int t, int* pi, int* pj) {
  bool found = false;
  Int best;
  for (int i = t; i < w.rows(); ++i)
    for (int j = t; j < w.cols(); ++j) {
      const Int& e = w.a.at(i, j);
      if (e == 0) continue;
      Int mag = abs(e);
      if (!found || mag < best) {
        found = true;
        best = mag;
        *pi = i;
        *pj = j;
      }
    }
  return found;
}

SnfResult diagonalize(Work& w) {
  const int n = std::min(w.rows(), w.cols());
  int t = 0;
  while (t < n) {
    int pi, pj;
    if (!find_pivot(w, t, &pi, &pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    // Reduce column t and row t by the pivot.  Nonzero remainders are
    // strictly smaller than the pivot, so re-running the pivot search makes
    // progress; the loop ends with the pivot alone in its row and column.
    bool clean = true;
    for (int i = t + 1; i < w.rows(); ++i) {
      if (w.a.at(i, t) == 0) continue;
      Int q = w.a.at(i, t) / w.a.at(t, t);  // truncated
      w.row_axpy(i, t, -q);
      if (w.a.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < w.cols(); ++j) {
      if (w.a.at(t, j) == 0) continue;
      Int q = w.a.at(t, j) / w.a.at(t, t);
      w.col_axpy(j, t, -q);
      if (w.a.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;

    // Pivot must divide everything that remains; otherwise fold a bad row
    // into row t and keep reducing (the pivot shrinks toward the gcd).
    bool divides = true;
    for (int i = t + 1; i < w.rows() && divides; ++i)
      for (int j = t + 1; j < w.cols(); ++j)
        if (w.a.at(i, j) % w.a.at(t, t) != 0) {
          w.row_axpy(t, i, 1);
          divides = false;
          break;
        }
    if (!divides) continue;

    ++t;
  }

  for (int i = 0; i < t; ++i)
    if (w.a.at(i, i) < 0) w.negate_row(i);

  SnfResult r;
  r.invariant_factors.resize(n, Int(0));
  for (int i = 0; i < t; ++i) r.invariant_factors[i] = w.a.at(i, i);
  r.rank = t;
  return r;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  Work w{m, nullptr, nullptr};
  return diagonalize(w);
}

SnfVerbose smith_normal_form_verbose(const IntMatrix& m) {
  SnfVerbose out{SnfResult{}, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  Work w{m, &out.u, &out.v};
  out.result = diagonalize(w);
  return out;
}

int kernel_rank(const IntMatrix& m) { return m.cols() - smith_normal_form(m).rank; }

}  // namespace conetop
