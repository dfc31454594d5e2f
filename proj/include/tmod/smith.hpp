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

#ifndef TMOD_SMITH_HPP
#define TMOD_SMITH_HPP

#include "tmod/fq_matrix.hpp"
#include "tmod/matrix.hpp"

namespace tmod {

using PolyMatrix = Matrix<FqPoly>;

/// U * M * V = D with U, V invertible over k[t] (det in k^x) and D diagonal
/// with monic invariant factors d_1 | d_2 | ... (zeros trail).
struct SmithDecomposition {
  PolyMatrix U, V, D;
  std::vector<FqPoly> invariant_factors;  // the nonzero diagonal, monic
  int rank = 0;

  /// Basis of the right kernel of M: the trailing columns of V.
  std::vector<std::vector<FqPoly>> kernel_basis() const;
  /// Nontrivial invariant factors of the cokernel (non-unit d_i).
  std::vector<FqPoly> torsion_factors() const;
};

SmithDecomposition smith_normal_form(const PolyMatrix& M);

/// Re-multiplication check U M V == D (test oracle support).
bool smith_verifies(const PolyMatrix& M, const SmithDecomposition& S);

PolyMatrix poly_matrix_zero(const Fq& F, int rows, int cols);
PolyMatrix poly_matrix_identity(const Fq& F, int n);
/// t*I - A for an F_q matrix A.
PolyMatrix char_matrix(const FqMatrix& A);

/// Characteristic polynomial as the product of the invariant factors of
/// t*I - M.
FqPoly char_poly_via_snf(const FqMatrix& M);

/// det over the integral domain k[t] by fraction-free elimination.
FqPoly poly_matrix_det(const PolyMatrix& M);

}  // namespace tmod

#endif
