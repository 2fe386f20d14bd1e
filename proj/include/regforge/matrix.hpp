#pragma once

#include <vector>

#include "regforge/numeric.hpp"
#include "regforge/poly.hpp"

namespace regforge {

// Dense integer matrix.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  static IntMat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  IntMat operator*(const IntMat& o) const;
  IntMat transpose() const;

  // Exact determinant (Bareiss fraction-free elimination), square only.
  Int det() const;
  size_t rank() const;

 private:
  size_t rows_, cols_;
  std::vector<Int> a_;
};

struct HnfResult {
  IntMat hnf;        // r x r upper triangular, positive pivots (r = row rank)
  Int index;         // product of pivots
  IntMat transform;  // unimodular U with input * U = [kernel-zeros | lifted hnf]
  size_t rank;       // number of pivots
  std::vector<std::vector<Int>> kernel;  // basis of {e : M e = 0}, one vector per column
};

// Column-style Hermite normal form.  Column operations only, so the
// result is invariant under right multiplication by unimodular
// matrices.  Pivot rows are processed bottom-up, producing an
// upper-triangular pivot block with positive diagonal and entries
// 0 <= h[i][j] < h[j][j] to the right of each pivot.
HnfResult hnf_general(const IntMat& m);

// Spec surface: requires full row rank, returns (hnf, index).
std::pair<IntMat, Int> hnf_with_index(const IntMat& m);

// Dense rational matrix.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  static RatMat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat transpose() const;
  Rat trace() const;

  Rat det() const;
  size_t rank() const;
  RatMat inverse() const;
  // Solves A x = b for square nonsingular A.
  std::vector<Rat> solve(const std::vector<Rat>& b) const;

  // Characteristic polynomial via the Faddeev-LeVerrier recurrence.
  RatPoly charpoly() const;

 private:
  size_t rows_, cols_;
  std::vector<Rat> a_;
};

}  // namespace regforge
