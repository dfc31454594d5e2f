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

#include "tmod/laurent_solve.hpp"

namespace tmod {

LaurentMatrix laurent_matrix_zero(const Fq& F, int rows, int cols) {
  return LaurentMatrix(rows, cols, LaurentSeries::zero(F));
}

LaurentMatrix laurent_matrix_identity(const Fq& F, int n) {
  return LaurentMatrix::identity(n, LaurentSeries::zero(F), LaurentSeries::one(F));
}

LaurentMatrix laurent_matrix_from_poly(const Matrix<FqPoly>& M) {
  if (M.rows() == 0 || M.cols() == 0) throw ValidationError("empty matrix");
  const Fq& F = M.at(0, 0).field();
  LaurentMatrix r = laurent_matrix_zero(F, M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) r.at(i, j) = LaurentSeries::from_poly(M.at(i, j));
  return r;
}

LaurentMatrix frobenius_dilate(const LaurentMatrix& M, unsigned s) {
  LaurentMatrix r = M;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) r.at(i, j) = M.at(i, j).frobenius_dilate(s);
  return r;
}

long matrix_val_lower_bound(const LaurentMatrix& M) {
  long v = kValInf;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) v = std::min(v, M.at(i, j).val_lower_bound());
  return v;
}

namespace {

// In-place elimination on [A | B]; afterwards A is the identity (up to
// permutation bookkeeping already applied).
void eliminate(LaurentMatrix& A, LaurentMatrix& B, long terms) {
  const int n = A.rows();
  if (A.cols() != n) throw ValidationError("laurent_solve: matrix must be square");
  for (int c = 0; c < n; ++c) {
    // minimal-valuation pivot for precision health
    int piv = -1;
    long best = kValInf;
    for (int i = c; i < n; ++i) {
      const LaurentSeries& x = A.at(i, c);
      if (x.vanishes()) continue;
      if (x.val() < best) {
        best = x.val();
        piv = i;
      }
    }
    if (piv < 0) throw MethodError("linear system singular at working precision");
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(c, j));
      for (int j = 0; j < B.cols(); ++j) std::swap(B.at(piv, j), B.at(c, j));
    }
    const LaurentSeries inv = A.at(c, c).inverse(terms);
    for (int j = 0; j < n; ++j) A.at(c, j) = A.at(c, j) * inv;
    for (int j = 0; j < B.cols(); ++j) B.at(c, j) = B.at(c, j) * inv;
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      const LaurentSeries f = A.at(i, c);
      if (f.vanishes()) continue;
      for (int j = 0; j < n; ++j) A.at(i, j) = A.at(i, j) - f * A.at(c, j);
      for (int j = 0; j < B.cols(); ++j) B.at(i, j) = B.at(i, j) - f * B.at(c, j);
    }
  }
}

}  // namespace

LVec laurent_solve(const LaurentMatrix& A, const LVec& b, long terms) {
  if (static_cast<int>(b.size()) != A.rows()) throw ValidationError("laurent_solve: dimension mismatch");
  const Fq& F = A.at(0, 0).field();
  LaurentMatrix M = A;
  LaurentMatrix B = laurent_matrix_zero(F, A.rows(), 1);
  for (int i = 0; i < A.rows(); ++i) B.at(i, 0) = b[static_cast<size_t>(i)];
  eliminate(M, B, terms);
  LVec x;
  x.reserve(static_cast<size_t>(A.rows()));
  for (int i = 0; i < A.rows(); ++i) x.push_back(B.at(i, 0));
  return x;
}

LaurentMatrix laurent_inverse(const LaurentMatrix& A, long terms) {
  const Fq& F = A.at(0, 0).field();
  LaurentMatrix M = A;
  LaurentMatrix B = laurent_matrix_identity(F, A.rows());
  eliminate(M, B, terms);
  return B;
}

LaurentSeries laurent_det(const LaurentMatrix& A, long terms) {
  const int n = A.rows();
  if (A.cols() != n) throw ValidationError("det of non-square matrix");
  const Fq& F = A.at(0, 0).field();
  LaurentMatrix M = A;
  LaurentSeries d = LaurentSeries::one(F);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    long best = kValInf;
    for (int i = c; i < n; ++i) {
      const LaurentSeries& x = M.at(i, c);
      if (x.vanishes()) continue;
      if (x.val() < best) {
        best = x.val();
        piv = i;
      }
    }
    if (piv < 0) throw MethodError("matrix singular at working precision");
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(c, j));
      d = -d;
    }
    d = d * M.at(c, c);
    const LaurentSeries inv = M.at(c, c).inverse(terms);
    for (int i = c + 1; i < n; ++i) {
      const LaurentSeries f = M.at(i, c) * inv;
      if (f.vanishes()) continue;
      for (int j = c; j < n; ++j) M.at(i, j) = M.at(i, j) - f * M.at(c, j);
    }
  }
  return d;
}

LaurentMatrix sylvester_solve(const LaurentMatrix& A, const LaurentMatrix& B,
                              const LaurentMatrix& C, long terms) {
  const int n = A.rows();
  if (A.cols() != n || B.rows() != n || B.cols() != n || C.rows() != n || C.cols() != n)
    throw ValidationError("sylvester_solve: all matrices must be square of one size");
  const Fq& F = A.at(0, 0).field();
  // rows and columns indexed by pairs (i,j) -> i*n+j; unknown vec(X) row-major
  LaurentMatrix K = laurent_matrix_zero(F, n * n, n * n);
  LVec rhs(static_cast<size_t>(n) * n, LaurentSeries::zero(F));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int row = i * n + j;
      rhs[static_cast<size_t>(row)] = C.at(i, j);
      // (X A)_{ij} = sum_k X_{ik} A_{kj}
      for (int k = 0; k < n; ++k)
        K.at(row, i * n + k) = K.at(row, i * n + k) + A.at(k, j);
      // -(B X)_{ij} = -sum_k B_{ik} X_{kj}
      for (int k = 0; k < n; ++k)
        K.at(row, k * n + j) = K.at(row, k * n + j) - B.at(i, k);
    }
  LVec x;
  try {
    x = laurent_solve(K, rhs, terms);
  } catch (const MethodError&) {
    throw MethodError("non-unique exponential coefficient");
  }
  LaurentMatrix X = laurent_matrix_zero(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) X.at(i, j) = x[static_cast<size_t>(i) * n + j];
  return X;
}

}  // namespace tmod
