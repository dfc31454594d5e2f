/*
   Copyright 2026 the tmod authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "tmod/fq_matrix.hpp"

namespace tmod {

FqMatrix FqMatrix::identity(const Fq& F, int n) {
  FqMatrix m(F, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool FqMatrix::is_zero() const {
  for (fq_t x : a_)
    if (x) return false;
  return true;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix dimension mismatch");
  FqMatrix r = *this;
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = F_->add(a_[k], o.a_[k]);
  return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix dimension mismatch");
  FqMatrix r = *this;
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = F_->sub(a_[k], o.a_[k]);
  return r;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (cols_ != o.rows_) throw ValidationError("matrix dimension mismatch");
  FqMatrix r(*F_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const fq_t x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = F_->add(r.at(i, j), F_->mul(x, o.at(k, j)));
    }
  return r;
}

FqMatrix FqMatrix::mul_scalar(fq_t s) const {
  FqMatrix r = *this;
  for (auto& x : r.a_) x = F_->mul(x, s);
  return r;
}

FqMatrix FqMatrix::pow(unsigned e) const {
  if (rows_ != cols_) throw ValidationError("pow of non-square matrix");
  FqMatrix r = identity(*F_, rows_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::vector<fq_t> FqMatrix::apply(const std::vector<fq_t>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ValidationError("matrix/vector dimension mismatch");
  std::vector<fq_t> r(static_cast<size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    fq_t acc = 0;
    for (int j = 0; j < cols_; ++j)
      if (v[j]) acc = F_->add(acc, F_->mul(at(i, j), v[j]));
    r[static_cast<size_t>(i)] = acc;
  }
  return r;
}

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<int> row_reduce(const Fq& F, std::vector<fq_t>& a, int rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  auto at = [&](int i, int j) -> fq_t& { return a[static_cast<size_t>(i) * cols + j]; };
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    const fq_t inv = F.inv(at(r, c));
    for (int j = 0; j < cols; ++j) at(r, j) = F.mul(at(r, j), inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const fq_t f = at(i, c);
      if (!f) continue;
      for (int j = 0; j < cols; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int FqMatrix::rank() const {
  std::vector<fq_t> a = a_;
  return static_cast<int>(row_reduce(*F_, a, rows_, cols_).size());
}

std::vector<std::vector<fq_t>> FqMatrix::kernel() const {
  std::vector<fq_t> a = a_;
  std::vector<int> piv = row_reduce(*F_, a, rows_, cols_);
  std::vector<bool> is_piv(static_cast<size_t>(cols_), false);
  for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
  std::vector<std::vector<fq_t>> basis;
  for (int fc = 0; fc < cols_; ++fc) {
    if (is_piv[static_cast<size_t>(fc)]) continue;
    std::vector<fq_t> v(static_cast<size_t>(cols_), 0);
    v[static_cast<size_t>(fc)] = 1;
    for (size_t r = 0; r < piv.size(); ++r)
      v[static_cast<size_t>(piv[r])] = F_->neg(a[r * cols_ + fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool FqMatrix::solve(const std::vector<fq_t>& b, std::vector<fq_t>& x) const {
  if (static_cast<int>(b.size()) != rows_) throw ValidationError("solve: dimension mismatch");
  // eliminate on [A | b]
  const int cols = cols_ + 1;
  std::vector<fq_t> a(static_cast<size_t>(rows_) * cols, 0);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) a[static_cast<size_t>(i) * cols + j] = at(i, j);
    a[static_cast<size_t>(i) * cols + cols_] = b[static_cast<size_t>(i)];
  }
  std::vector<int> piv = row_reduce(*F_, a, rows_, cols);
  for (int c : piv)
    if (c == cols_) return false;  // pivot in the augmented column
  x.assign(static_cast<size_t>(cols_), 0);
  for (size_t r = 0; r < piv.size(); ++r)
    x[static_cast<size_t>(piv[r])] = a[r * cols + cols_];
  return true;
}

FqMatrix FqMatrix::inverse() const {
  if (rows_ != cols_) throw ValidationError("inverse of non-square matrix");
  const int cols = 2 * cols_;
  std::vector<fq_t> a(static_cast<size_t>(rows_) * cols, 0);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) a[static_cast<size_t>(i) * cols + j] = at(i, j);
    a[static_cast<size_t>(i) * cols + cols_ + i] = 1;
  }
  std::vector<int> piv = row_reduce(*F_, a, rows_, cols);
  if (static_cast<int>(piv.size()) < rows_ || piv.back() >= cols_)
    throw ValidationError("matrix is singular");
  for (int r = 0; r < rows_; ++r)
    if (piv[static_cast<size_t>(r)] != r) throw ValidationError("matrix is singular");
  FqMatrix inv(*F_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = a[static_cast<size_t>(i) * cols + cols_ + j];
  return inv;
}

fq_t FqMatrix::det() const {
  if (rows_ != cols_) throw ValidationError("det of non-square matrix");
  std::vector<fq_t> a = a_;
  auto at = [&](int i, int j) -> fq_t& { return a[static_cast<size_t>(i) * cols_ + j]; };
  fq_t d = 1;
  for (int c = 0; c < cols_; ++c) {
    int piv = -1;
    for (int i = c; i < rows_; ++i)
      if (at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(c, j));
      d = F_->neg(d);
    }
    d = F_->mul(d, at(c, c));
    const fq_t inv = F_->inv(at(c, c));
    for (int i = c + 1; i < rows_; ++i) {
      const fq_t f = F_->mul(at(i, c), inv);
      if (!f) continue;
      for (int j = c; j < cols_; ++j) at(i, j) = F_->sub(at(i, j), F_->mul(f, at(c, j)));
    }
  }
  return d;
}

FqPoly FqMatrix::char_poly() const {
  if (rows_ != cols_) throw ValidationError("char_poly of non-square matrix");
  const int n = rows_;
  const Fq& F = *F_;
  if (n == 0) return FqPoly::one(F);
  // reduce to upper Hessenberg form by similarity
  std::vector<fq_t> h = a_;
  auto at = [&](int i, int j) -> fq_t& { return h[static_cast<size_t>(i) * n + j]; };
  for (int c = 0; c + 2 < n; ++c) {
    int piv = -1;
    for (int i = c + 1; i < n; ++i)
      if (at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(at(i, piv), at(i, c + 1));
    }
    const fq_t inv = F.inv(at(c + 1, c));
    for (int i = c + 2; i < n; ++i) {
      const fq_t f = F.mul(at(i, c), inv);
      if (!f) continue;
      for (int j = 0; j < n; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(c + 1, j)));
      for (int k = 0; k < n; ++k) at(k, c + 1) = F.add(at(k, c + 1), F.mul(f, at(k, i)));
    }
  }
  // char polys of leading principal blocks of the Hessenberg matrix
  std::vector<FqPoly> p(static_cast<size_t>(n) + 1, FqPoly::one(F));
  const FqPoly t = FqPoly::t(F);
  for (int k = 1; k <= n; ++k) {
    FqPoly acc = (t - FqPoly::constant(F, at(k - 1, k - 1))) * p[static_cast<size_t>(k - 1)];
    fq_t pr = 1;
    for (int i = 1; i < k; ++i) {
      pr = F.mul(pr, at(k - i, k - i - 1));
      const fq_t coef = F.mul(at(k - 1 - i, k - 1), pr);
      if (coef) acc = acc - FqPoly::constant(F, coef) * p[static_cast<size_t>(k - 1 - i)];
    }
    p[static_cast<size_t>(k)] = acc;
  }
  return p[static_cast<size_t>(n)];
}

}  // namespace tmod
