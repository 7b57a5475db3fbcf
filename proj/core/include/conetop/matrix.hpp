#pragma once

#include <vector>

#include "conetop/rational.hpp"

namespace conetop {

// Dense row-major matrices.  Sizes here are desk scale; no sparse storage.

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw invalid_input("negative matrix dimension");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw invalid_input("negative matrix dimension");
  }

  static RatMatrix from_rows(const std::vector<RatVec>& rows, int cols) {
    RatMatrix m(int(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (int(rows[i].size()) != cols) throw invalid_input("ragged matrix rows");
      for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

  RatVec row(int r) const {
    RatVec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
  }

  bool operator==(const RatMatrix&) const = default;

 private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

// Rank of a rational matrix by exact Gaussian elimination.
int rat_rank(RatMatrix m);

// Basis of the right kernel {x : m x = 0}, exact.
std::vector<RatVec> rat_kernel_basis(RatMatrix m);

}  // namespace conetop
