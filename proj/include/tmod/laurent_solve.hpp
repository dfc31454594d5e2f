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

#ifndef TMOD_LAURENT_SOLVE_HPP
#define TMOD_LAURENT_SOLVE_HPP

#include "tmod/laurent.hpp"
#include "tmod/matrix.hpp"

namespace tmod {

using LaurentMatrix = Matrix<LaurentSeries>;

LaurentMatrix laurent_matrix_zero(const Fq& F, int rows, int cols);
LaurentMatrix laurent_matrix_identity(const Fq& F, int n);
LaurentMatrix laurent_matrix_from_poly(const Matrix<FqPoly>& M);
/// Entrywise q^s-power (exponent dilation).
LaurentMatrix frobenius_dilate(const LaurentMatrix& M, unsigned s);
long matrix_val_lower_bound(const LaurentMatrix& M);

/// Solve A x = b over k((t^-1)) by Gaussian elimination with minimal-val
/// pivoting; `terms` bounds the retained precision of entry inverses.
/// Throws MethodError when A is singular at working precision.
LVec laurent_solve(const LaurentMatrix& A, const LVec& b, long terms);

LaurentMatrix laurent_inverse(const LaurentMatrix& A, long terms);

LaurentSeries laurent_det(const LaurentMatrix& A, long terms);

/// Solve X A - B X = C (all square, same size).  The Kronecker system must
/// be invertible at working precision; otherwise MethodError
/// ("non-unique exponential coefficient").
LaurentMatrix sylvester_solve(const LaurentMatrix& A, const LaurentMatrix& B,
                              const LaurentMatrix& C, long terms);

}  // namespace tmod

#endif
