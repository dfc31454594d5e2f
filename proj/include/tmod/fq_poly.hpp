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

#ifndef TMOD_FQ_POLY_HPP
#define TMOD_FQ_POLY_HPP

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tmod/fq.hpp"

namespace tmod {

/// Degree of the zero polynomial.
inline constexpr int kNegInfDeg = std::numeric_limits<int>::min();

/// Dense univariate polynomial over F_q in the variable t, coefficients
/// lowest-first with no trailing zeros.  Immutable value semantics: all
/// operations return fresh polynomials.
class FqPoly {
 public:
  FqPoly() : F_(nullptr) {}
  explicit FqPoly(const Fq& F) : F_(&F) {}
  FqPoly(const Fq& F, std::vector<fq_t> coeffs);

  static FqPoly zero(const Fq& F) { return FqPoly(F); }
  static FqPoly one(const Fq& F) { return FqPoly(F, {1}); }
  static FqPoly constant(const Fq& F, fq_t c) { return FqPoly(F, {c}); }
  static FqPoly t(const Fq& F) { return FqPoly(F, {0, 1}); }
  /// t^k, k >= 0
  static FqPoly t_pow(const Fq& F, int k);

  const Fq& field() const { return *F_; }
  const std::vector<fq_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1; }
  fq_t coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? fq_t{0} : c_[i];
  }
  fq_t lc() const { return c_.empty() ? fq_t{0} : c_.back(); }
  bool is_monic() const { return lc() == 1; }

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator-() const;
  FqPoly operator*(const FqPoly& o) const;
  FqPoly mul_scalar(fq_t s) const;
  bool operator==(const FqPoly& o) const { return F_ == o.F_ && c_ == o.c_; }
  bool operator!=(const FqPoly& o) const { return !(*this == o); }

  /// Quotient and remainder by a nonzero divisor.
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const;
  FqPoly operator/(const FqPoly& d) const { return divmod(d).first; }
  FqPoly operator%(const FqPoly& d) const { return divmod(d).second; }
  /// True if o divides this exactly.
  bool divisible_by(const FqPoly& o) const;

  FqPoly monic() const;
  FqPoly shift(int k) const;  // multiply by t^k, k >= 0

  fq_t eval(fq_t x) const;
  /// f^(q^s): coefficientwise q^s-th power, which over F_q dilates exponents.
  FqPoly frobenius_dilate(unsigned s, unsigned q_base) const;
  /// j-th Hasse derivative: D_j(t^m) = C(m, j) t^(m-j).
  FqPoly hasse_derivative(unsigned j) const;

  static FqPoly gcd(const FqPoly& a, const FqPoly& b);  // monic gcd
  /// g = gcd, and u, v with u*a + v*b = g.
  static FqPoly xgcd(const FqPoly& a, const FqPoly& b, FqPoly& u, FqPoly& v);
  /// base^e mod m
  static FqPoly pow_mod(const FqPoly& base, unsigned long long e, const FqPoly& m);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  const Fq* F_;
  std::vector<fq_t> c_;
};

FqPoly operator*(fq_t s, const FqPoly& p);

}  // namespace tmod

#endif
