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

#ifndef TMOD_FQ_MATRIX_HPP
#define TMOD_FQ_MATRIX_HPP

#include <vector>

#include "tmod/fq_poly.hpp"

namespace tmod {

/// Dense matrix over F_q with flat element-code storage.  The workhorse for
/// residue-field reductions and F_q-linear algebra.
class FqMatrix {
 public:
  FqMatrix() : F_(nullptr), rows_(0), cols_(0) {}
  FqMatrix(const Fq& F, int rows, int cols)
      : F_(&F), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static FqMatrix identity(const Fq& F, int n);

  const Fq& field() const { return *F_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  fq_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  fq_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  FqMatrix operator+(const FqMatrix& o) const;
  FqMatrix operator-(const FqMatrix& o) const;
  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix mul_scalar(fq_t s) const;
  FqMatrix pow(unsigned e) const;
  bool operator==(const FqMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  std::vector<fq_t> apply(const std::vector<fq_t>& v) const;

  /// Row echelon rank.
  int rank() const;
  /// Basis of the right kernel (vectors of length cols).
  std::vector<std::vector<fq_t>> kernel() const;
  /// Solve A x = b; returns false when inconsistent.
  bool solve(const std::vector<fq_t>& b, std::vector<fq_t>& x) const;
  FqMatrix inverse() const;
  fq_t det() const;

  /// Characteristic polynomial det(t I - A), monic, via exact Hessenberg
  /// reduction over F_q.
  FqPoly char_poly() const;

 private:
  const Fq* F_;
  int rows_, cols_;
  std::vector<fq_t> a_;
};

}  // namespace tmod

#endif
