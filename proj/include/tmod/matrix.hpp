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

#ifndef TMOD_MATRIX_HPP
#define TMOD_MATRIX_HPP

#include <vector>

#include "tmod/errors.hpp"

namespace tmod {

/// Dense matrix over a ring element type with value semantics (FqPoly,
/// LaurentSeries).  Elements carry their own field handle, so construction
/// takes a prototype zero.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, const T& zero)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, zero) {}

  static Matrix identity(int n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix dimension mismatch");
    if (a_.empty() || o.a_.empty()) throw ValidationError("matrix product on empty matrix");
    Matrix r(rows_, o.cols_, a_[0] - a_[0]);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& x = at(i, k);
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + x * o.at(k, j);
      }
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw ValidationError("matrix/vector dimension mismatch");
    std::vector<T> r;
    r.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
      T acc = at(i, 0) * v[0];
      for (int j = 1; j < cols_; ++j) acc = acc + at(i, j) * v[j];
      r.push_back(acc);
    }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, a_[0]);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix dimension mismatch");
  }
  int rows_, cols_;
  std::vector<T> a_;
};

}  // namespace tmod

#endif
