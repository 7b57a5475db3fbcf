#include "conetop/lp.hpp"

#include <algorithm>
#include <cassert>

namespace conetop {

bool satisfies_weak(const RatMatrix& a, const RatVec& b, const RatVec& x) {
  if (a.rows() != int(b.size()) || a.cols() != int(x.size())) return false;
  for (int r = 0; r < a.rows(); ++r) {
    Rat lhs = 0;
    for (int c = 0; c < a.cols(); ++c) lhs += a.at(r, c) * x[c];
    if (lhs < b[r]) return false;
  }
  return true;
}

// Phase-1 simplex on:  A u - A w - s + z' = b',  u, w, s, z >= 0,
// where rows are sign-flipped so b' >= 0 and z starts basic.  The original
// system a x >= b is feasible iff min sum(z) == 0, with x = u - w.
std::optional<RatVec> feasible_weak(const RatMatrix& a, const RatVec& b) {
  const int m = a.rows();
  const int d = a.cols();
  if (m != int(b.size())) throw invalid_input("feasible_weak: rows of a and size of b differ");

  if (m == 0) return RatVec(d, Rat(0));

  // Column layout: u_0..u_{d-1}, w_0..w_{d-1}, s_0..s_{m-1}, z_0..z_{m-1}.
  const int ncols = 2 * d + 2 * m;
  const int art0 = 2 * d + m;

  std::vector<RatVec> t(m, RatVec(ncols, Rat(0)));
  RatVec rhs(m);
  for (int i = 0; i < m; ++i) {
    int sign = (b[i] < 0) ? -1 : 1;
    for (int j = 0; j < d; ++j) {
      t[i][j] = sign * a.at(i, j);
      t[i][d + j] = -sign * a.at(i, j);
    }
    t[i][2 * d + i] = -sign;
    t[i][art0 + i] = 1;
    rhs[i] = sign * b[i];
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = art0 + i;

  auto reduced_cost = [&](int j) {
    // cost 1 on artificials, 0 elsewhere.
    Rat cbar = (j >= art0) ? 1 : 0;
    for (int i = 0; i < m; ++i)
      if (basis[i] >= art0) cbar -= t[i][j];
    return cbar;
  };

  while (true) {
    // Bland: entering column = lowest index with negative reduced cost.
    int enter = -1;
    for (int j = 0; j < ncols; ++j) {
      if (reduced_cost(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    // Ratio test; ties broken by lowest basic variable index (Bland).
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = rhs[i] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase-1 objective is bounded below by zero, so a negative-cost column
    // always admits a leaving row.
    assert(leave >= 0);

    Rat piv = t[leave][enter];
    for (int j = 0; j < ncols; ++j) t[leave][j] /= piv;
    rhs[leave] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (int j = 0; j < ncols; ++j) t[i][j] -= f * t[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    basis[leave] = enter;
  }

  Rat objective = 0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= art0) objective += rhs[i];
  if (objective != 0) return std::nullopt;

  RatVec x(d, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < d)
      x[basis[i]] += rhs[i];
    else if (basis[i] < 2 * d)
      x[basis[i] - d] -= rhs[i];
  }
  assert(satisfies_weak(a, b, x));
  return x;
}

namespace {

struct FmRow {
  RatVec c;
  Rat beta;
};

// Scale to a primitive integer row, preserving the inequality direction.
void normalize_row(FmRow& r) {
  Int l = 1;
  for (const Rat& q : r.c) l = lcm(l, q.get_den());
  l = lcm(l, r.beta.get_den());
  Int g = 0;
  auto scaled = [&](const Rat& q) { return Rat(q * Rat(l)); };
  for (const Rat& q : r.c) g = gcd(g, scaled(q).get_num());
  g = gcd(g, scaled(r.beta).get_num());
  if (g == 0) g = 1;
  Rat f = Rat(l) / Rat(g);
  for (Rat& q : r.c) q *= f;
  r.beta *= f;
}

}  // namespace

bool fourier_motzkin_feasible(const RatMatrix& a, const RatVec& b) {
  const int m = a.rows();
  const int d = a.cols();
  if (m != int(b.size()))
    throw invalid_input("fourier_motzkin_feasible: rows of a and size of b differ");
  if (d > 8)
    throw guard_exceeded("fourier_motzkin_feasible: refusing > 8 variables (got " +
                         std::to_string(d) + ")");

  std::vector<FmRow> rows;
  rows.reserve(m);
  for (int i = 0; i < m; ++i) {
    FmRow r{a.row(i), b[i]};
    normalize_row(r);
    rows.push_back(std::move(r));
  }

  auto is_constant = [](const FmRow& r) {
    for (const Rat& q : r.c)
      if (q != 0) return false;
    return true;
  };

  for (int k = d - 1; k >= 0; --k) {
    std::vector<FmRow> keep, pos, neg;
    for (FmRow& r : rows) {
      if (is_constant(r)) {
        if (r.beta > 0) return false;  // 0 >= beta with beta > 0
        continue;
      }
      if (r.c[k] > 0)
        pos.push_back(std::move(r));
      else if (r.c[k] < 0)
        neg.push_back(std::move(r));
      else
        keep.push_back(std::move(r));
    }

    std::vector<FmRow> next = std::move(keep);
    for (const FmRow& p : pos)
      for (const FmRow& n : neg) {
        // (-n_k) * p + (p_k) * n eliminates x_k with positive multipliers.
        Rat lam = -n.c[k], mu = p.c[k];
        FmRow r;
        r.c.resize(d);
        for (int j = 0; j < d; ++j) r.c[j] = lam * p.c[j] + mu * n.c[j];
        r.beta = lam * p.beta + mu * n.beta;
        normalize_row(r);
        if (is_constant(r)) {
          if (r.beta > 0) return false;
          continue;
        }
        next.push_back(std::move(r));
      }

    // Duplicate rows multiply fast under elimination; primitive form makes
    // exact duplicates cheap to drop.
    std::sort(next.begin(), next.end(), [](const FmRow& x, const FmRow& y) {
      if (x.c != y.c) return x.c < y.c;
      return x.beta < y.beta;
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const FmRow& x, const FmRow& y) {
                             return x.c == y.c && x.beta == y.beta;
                           }),
               next.end());
    rows = std::move(next);
  }

  for (const FmRow& r : rows)
    if (r.beta > 0) return false;
  return true;
}

}  // namespace conetop
