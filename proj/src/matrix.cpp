#include "regforge/matrix.hpp"

#include <algorithm>
#include <utility>

namespace regforge {

IntMat IntMat::identity(size_t n) {
  IntMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw Error("matrix dimension mismatch");
  IntMat r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Int IntMat::det() const {
  if (rows_ != cols_) throw Error("determinant of non-square matrix");
  size_t n = rows_;
  if (n == 0) return Int(1);
  IntMat a = *this;
  Int prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return Int(0);
      for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = t;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

size_t IntMat::rank() const {
  RatMat m(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m.at(i, j) = Rat(at(i, j));
  return m.rank();
}

HnfResult hnf_general(const IntMat& input) {
  const size_t m = input.rows(), n = input.cols();
  IntMat a = input;
  IntMat u = IntMat::identity(n);

  auto add_col = [&](size_t dst, size_t src, const Int& f) {
    if (f == 0) return;
    for (size_t i = 0; i < m; ++i) a.at(i, dst) += f * a.at(i, src);
    for (size_t i = 0; i < n; ++i) u.at(i, dst) += f * u.at(i, src);
  };
  auto swap_col = [&](size_t x, size_t y) {
    if (x == y) return;
    for (size_t i = 0; i < m; ++i) std::swap(a.at(i, x), a.at(i, y));
    for (size_t i = 0; i < n; ++i) std::swap(u.at(i, x), u.at(i, y));
  };
  auto neg_col = [&](size_t x) {
    for (size_t i = 0; i < m; ++i) a.at(i, x) = -a.at(i, x);
    for (size_t i = 0; i < n; ++i) u.at(i, x) = -u.at(i, x);
  };

  size_t c = n;  // columns [0, c) still active
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, column), bottom-up
  for (size_t ii = m; ii-- > 0;) {
    if (c == 0) break;
    // Reduce row ii across the active columns to a single gcd entry.
    while (true) {
      size_t best = c;
      for (size_t j = 0; j < c; ++j) {
        if (a.at(ii, j) == 0) continue;
        if (best == c ||
            mpz_cmpabs(a.at(ii, j).get_mpz_t(), a.at(ii, best).get_mpz_t()) < 0)
          best = j;
      }
      if (best == c) break;  // row is zero on active columns
      bool others = false;
      for (size_t j = 0; j < c; ++j) {
        if (j == best || a.at(ii, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a.at(ii, j).get_mpz_t(), a.at(ii, best).get_mpz_t());
        add_col(j, best, -q);
        if (a.at(ii, j) != 0) others = true;
      }
      if (!others) {
        swap_col(best, c - 1);
        if (a.at(ii, c - 1) < 0) neg_col(c - 1);
        --c;
        pivots.emplace_back(ii, c);
        break;
      }
    }
  }

  std::reverse(pivots.begin(), pivots.end());  // now ascending by row
  const size_t r = pivots.size();

  // Normalize entries to the right of each pivot into [0, pivot).
  for (size_t l = 0; l < r; ++l) {
    size_t col_l = pivots[l].second;
    for (size_t k = 0; k < l; ++k) {
      size_t row_k = pivots[k].first, col_k = pivots[k].second;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(row_k, col_l).get_mpz_t(), a.at(row_k, col_k).get_mpz_t());
      add_col(col_l, col_k, -q);
    }
  }

  HnfResult res;
  res.rank = r;
  res.transform = u;
  res.hnf = IntMat(r, r);
  res.index = 1;
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) res.hnf.at(i, j) = a.at(pivots[i].first, pivots[j].second);
    res.index *= res.hnf.at(i, i);
  }
  for (size_t j = 0; j < n - r; ++j) {
    std::vector<Int> k(n);
    for (size_t i = 0; i < n; ++i) k[i] = u.at(i, j);
    res.kernel.push_back(std::move(k));
  }
  return res;
}

std::pair<IntMat, Int> hnf_with_index(const IntMat& m) {
  HnfResult r = hnf_general(m);
  if (r.rank != m.rows()) throw Error("hnf_with_index: matrix is rank deficient");
  return {r.hnf, r.index};
}

RatMat RatMat::identity(size_t n) {
  RatMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw Error("matrix dimension mismatch");
  RatMat r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix dimension mismatch");
  RatMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix dimension mismatch");
  RatMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rat RatMat::trace() const {
  if (rows_ != cols_) throw Error("trace of non-square matrix");
  Rat t(0);
  for (size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Rat RatMat::det() const {
  if (rows_ != cols_) throw Error("determinant of non-square matrix");
  RatMat a = *this;
  size_t n = rows_;
  Rat d(1);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a.at(p, k) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != k) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      d = -d;
    }
    d *= a.at(k, k);
    Rat inv = Rat(1) / a.at(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      Rat f = a.at(i, k) * inv;
      if (f == 0) continue;
      for (size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return d;
}

size_t RatMat::rank() const {
  RatMat a = *this;
  size_t r = 0;
  for (size_t col = 0; col < cols_ && r < rows_; ++col) {
    size_t p = r;
    while (p < rows_ && a.at(p, col) == 0) ++p;
    if (p == rows_) continue;
    for (size_t j = 0; j < cols_; ++j) std::swap(a.at(r, j), a.at(p, j));
    Rat inv = Rat(1) / a.at(r, col);
    for (size_t i = r + 1; i < rows_; ++i) {
      Rat f = a.at(i, col) * inv;
      if (f == 0) continue;
      for (size_t j = col; j < cols_; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

RatMat RatMat::inverse() const {
  if (rows_ != cols_) throw Error("inverse of non-square matrix");
  size_t n = rows_;
  RatMat a = *this;
  RatMat inv = RatMat::identity(n);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a.at(p, k) == 0) ++p;
    if (p == n) throw Error("singular matrix");
    if (p != k)
      for (size_t j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rat f = Rat(1) / a.at(k, k);
    for (size_t j = 0; j < n; ++j) {
      a.at(k, j) *= f;
      inv.at(k, j) *= f;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat g = a.at(i, k);
      for (size_t j = 0; j < n; ++j) {
        a.at(i, j) -= g * a.at(k, j);
        inv.at(i, j) -= g * inv.at(k, j);
      }
    }
  }
  return inv;
}

std::vector<Rat> RatMat::solve(const std::vector<Rat>& b) const {
  if (rows_ != cols_ || b.size() != rows_) throw Error("solve: bad dimensions");
  RatMat inv = inverse();
  std::vector<Rat> x(rows_, Rat(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) x[i] += inv.at(i, j) * b[j];
  return x;
}

RatPoly RatMat::charpoly() const {
  if (rows_ != cols_) throw Error("charpoly of non-square matrix");
  size_t n = rows_;
  std::vector<Rat> coeffs(n + 1, Rat(0));
  coeffs[n] = 1;
  RatMat b = *this;
  Rat c = -b.trace();
  if (n >= 1) coeffs[n - 1] = c;
  for (size_t k = 2; k <= n; ++k) {
    RatMat shifted = b;
    for (size_t i = 0; i < n; ++i) shifted.at(i, i) += c;
    b = (*this) * shifted;
    c = -b.trace() / Rat(static_cast<long>(k));
    coeffs[n - k] = c;
  }
  return RatPoly(coeffs);
}

}  // namespace regforge
