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

#include "tmod/smith.hpp"

namespace tmod {

PolyMatrix poly_matrix_zero(const Fq& F, int rows, int cols) {
  return PolyMatrix(rows, cols, FqPoly::zero(F));
}

PolyMatrix poly_matrix_identity(const Fq& F, int n) {
  return PolyMatrix::identity(n, FqPoly::zero(F), FqPoly::one(F));
}

PolyMatrix char_matrix(const FqMatrix& A) {
  if (A.rows() != A.cols()) throw ValidationError("char_matrix of non-square matrix");
  const Fq& F = A.field();
  PolyMatrix M = poly_matrix_zero(F, A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      FqPoly e = FqPoly::constant(F, F.neg(A.at(i, j)));
      if (i == j) e = e + FqPoly::t(F);
      M.at(i, j) = e;
    }
  return M;
}

namespace {

int deg_or_big(const FqPoly& p) { return p.is_zero() ? std::numeric_limits<int>::max() : p.degree(); }

struct Snf {
  const Fq& F;
  PolyMatrix A, U, V;
  int rows, cols;

  Snf(const PolyMatrix& M, const Fq& F_)
      : F(F_), A(M), U(poly_matrix_identity(F_, M.rows())), V(poly_matrix_identity(F_, M.cols())),
        rows(M.rows()), cols(M.cols()) {}

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols; ++j) std::swap(A.at(a, j), A.at(b, j));
    for (int j = 0; j < rows; ++j) std::swap(U.at(a, j), U.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows; ++i) std::swap(A.at(i, a), A.at(i, b));
    for (int i = 0; i < cols; ++i) std::swap(V.at(i, a), V.at(i, b));
  }
  // row[a] -= f * row[b]
  void row_op(int a, int b, const FqPoly& f) {
    if (f.is_zero()) return;
    for (int j = 0; j < cols; ++j) A.at(a, j) = A.at(a, j) - f * A.at(b, j);
    for (int j = 0; j < rows; ++j) U.at(a, j) = U.at(a, j) - f * U.at(b, j);
  }
  // col[a] -= f * col[b]
  void col_op(int a, int b, const FqPoly& f) {
    if (f.is_zero()) return;
    for (int i = 0; i < rows; ++i) A.at(i, a) = A.at(i, a) - f * A.at(i, b);
    for (int i = 0; i < cols; ++i) V.at(i, a) = V.at(i, a) - f * V.at(i, b);
  }
  void scale_row(int a, fq_t s) {
    for (int j = 0; j < cols; ++j) A.at(a, j) = A.at(a, j).mul_scalar(s);
    for (int j = 0; j < rows; ++j) U.at(a, j) = U.at(a, j).mul_scalar(s);
  }

  // smallest-degree nonzero entry in the trailing submatrix at (k,k)
  bool find_pivot(int k, int& pi, int& pj) {
    int best = std::numeric_limits<int>::max();
    pi = pj = -1;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j) {
        int d = deg_or_big(A.at(i, j));
        if (d < best) {
          best = d;
          pi = i;
          pj = j;
        }
      }
    return pi >= 0 && !A.at(pi, pj).is_zero();
  }

  void run() {
    const int steps = std::min(rows, cols);
    for (int k = 0; k < steps; ++k) {
      for (;;) {
        int pi, pj;
        if (!find_pivot(k, pi, pj)) return;  // trailing block is zero
        swap_rows(k, pi);
        swap_cols(k, pj);
        // clear column k below and row k to the right by Euclidean steps
        bool clean = true;
        for (int i = k + 1; i < rows; ++i) {
          if (A.at(i, k).is_zero()) continue;
          row_op(i, k, A.at(i, k) / A.at(k, k));
          if (!A.at(i, k).is_zero()) clean = false;  // remainder of lower degree
        }
        for (int j = k + 1; j < cols; ++j) {
          if (A.at(k, j).is_zero()) continue;
          col_op(j, k, A.at(k, j) / A.at(k, k));
          if (!A.at(k, j).is_zero()) clean = false;
        }
        if (!clean) continue;  // a smaller-degree entry appeared, re-pivot
        // divisibility sweep of the remaining block
        bool divides_all = true;
        for (int i = k + 1; i < rows && divides_all; ++i)
          for (int j = k + 1; j < cols && divides_all; ++j)
            if (!A.at(i, j).is_zero() && !A.at(i, j).divisible_by(A.at(k, k))) {
              // fold the offending row into row k and restart the pivot
              row_op(k, i, FqPoly::constant(F, F.neg(1)));
              divides_all = false;
            }
        if (divides_all) break;
      }
    }
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const PolyMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0) throw ValidationError("smith_normal_form on empty matrix");
  const Fq& F = M.at(0, 0).field();
  Snf s(M, F);
  s.run();
  // normalize diagonal to monic
  const int steps = std::min(M.rows(), M.cols());
  for (int k = 0; k < steps; ++k) {
    const FqPoly& d = s.A.at(k, k);
    if (!d.is_zero() && !d.is_monic()) s.scale_row(k, F.inv(d.lc()));
  }
  SmithDecomposition out;
  out.U = s.U;
  out.V = s.V;
  out.D = s.A;
  for (int k = 0; k < steps; ++k) {
    if (s.A.at(k, k).is_zero()) break;
    out.invariant_factors.push_back(s.A.at(k, k));
  }
  out.rank = static_cast<int>(out.invariant_factors.size());
  return out;
}

std::vector<std::vector<FqPoly>> SmithDecomposition::kernel_basis() const {
  std::vector<std::vector<FqPoly>> basis;
  const int cols = V.cols();
  for (int j = rank; j < cols; ++j) {
    std::vector<FqPoly> v;
    v.reserve(cols);
    for (int i = 0; i < cols; ++i) v.push_back(V.at(i, j));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FqPoly> SmithDecomposition::torsion_factors() const {
  std::vector<FqPoly> t;
  for (const auto& d : invariant_factors)
    if (d.degree() > 0) t.push_back(d);
  return t;
}

bool smith_verifies(const PolyMatrix& M, const SmithDecomposition& S) {
  return S.U * M * S.V == S.D;
}

FqPoly char_poly_via_snf(const FqMatrix& M) {
  SmithDecomposition S = smith_normal_form(char_matrix(M));
  FqPoly p = FqPoly::one(M.field());
  for (const auto& d : S.invariant_factors) p = p * d;
  if (S.rank != M.rows()) throw ValidationError("t I - M is singular over k[t]");
  return p;
}

FqPoly poly_matrix_det(const PolyMatrix& M) {
  if (M.rows() != M.cols()) throw ValidationError("det of non-square matrix");
  const int n = M.rows();
  if (n == 0) throw ValidationError("det of empty matrix");
  const Fq& F = M.at(0, 0).field();
  // Bareiss fraction-free elimination over the domain k[t]
  PolyMatrix A = M;
  FqPoly prev = FqPoly::one(F);
  fq_t sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A.at(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!A.at(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return FqPoly::zero(F);
      for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(piv, j));
      sign = F.neg(sign);
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        FqPoly num = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
        auto [q, r] = num.divmod(prev);
        if (!r.is_zero()) throw ValidationError("fraction-free elimination: inexact division");
        A.at(i, j) = q;
      }
    prev = A.at(k, k);
  }
  return A.at(n - 1, n - 1).mul_scalar(sign);
}

}  // namespace tmod
