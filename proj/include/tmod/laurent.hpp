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

#ifndef TMOD_LAURENT_HPP
#define TMOD_LAURENT_HPP

#include <string>
#include <vector>

#include "tmod/fq_poly.hpp"

namespace tmod {

/// Coefficients are known for all exponents >= floor.  kExactFloor marks a
/// series known everywhere (finite support).
inline constexpr long kExactFloor = std::numeric_limits<long>::min() / 4;
/// Valuation of the exact zero series.
inline constexpr long kValInf = std::numeric_limits<long>::max() / 4;

/// Element of k((t^-1)) with an explicit precision window.
///
/// A series stores its coefficients for exponents in [floor, lead], highest
/// first, together with the knowledge floor: every coefficient at exponent
/// >= floor is known exactly (zero above lead), nothing is claimed below.
/// Every operation computes the pessimistic floor of its result; reading a
/// coefficient below the floor throws PrecisionError rather than returning
/// a silent zero.
class LaurentSeries {
 public:
  LaurentSeries() : F_(nullptr), lead_(-1), floor_(0) {}

  /// Exact zero.
  static LaurentSeries zero(const Fq& F);
  /// Zero at precision: vanishes at every exponent >= floor.
  static LaurentSeries zero_at(const Fq& F, long floor);
  static LaurentSeries one(const Fq& F) { return monomial(F, 1, 0); }
  /// c * t^e (exact).
  static LaurentSeries monomial(const Fq& F, fq_t c, long e);
  /// Exact finite series from a polynomial in t.
  static LaurentSeries from_poly(const FqPoly& p);
  /// Exact finite series with given leading exponent and coefficients,
  /// highest exponent first.
  static LaurentSeries exact(const Fq& F, long lead, std::vector<fq_t> coeffs);
  /// Series with knowledge floor: coefficients cover [floor, lead].
  static LaurentSeries windowed(const Fq& F, long lead, std::vector<fq_t> coeffs, long floor);

  const Fq& field() const { return *F_; }
  bool attached() const { return F_ != nullptr; }

  bool is_exact() const { return floor_ == kExactFloor; }
  /// True when no nonzero coefficient is known (exact zero or zero at
  /// precision).
  bool vanishes() const { return c_.empty(); }
  bool is_exact_zero() const { return c_.empty() && is_exact(); }

  /// Exponent of the leading (nonzero) coefficient.  Requires !vanishes().
  long lead() const;
  /// Knowledge floor: coefficients at exponents >= floor() are known.
  long floor() const { return floor_; }
  /// No nonzero coefficients above this exponent (support bound).
  long support_bound() const { return c_.empty() ? floor_ - 1 : lead_; }
  /// Retained coefficient count (kValInf when exact).
  long precision() const { return is_exact() ? kValInf : lead() - floor_ + 1; }

  /// val = -lead for a series with a visible leading term, kValInf for the
  /// exact zero.  Throws PrecisionError when only "zero at precision" is
  /// known: use val_lower_bound then.
  long val() const;
  /// Guaranteed lower bound on the valuation.
  long val_lower_bound() const;

  /// Coefficient of t^e; throws PrecisionError below the knowledge floor.
  fq_t coeff(long e) const;
  bool knows(long e) const { return is_exact() || e >= floor_; }

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries mul_scalar(fq_t s) const;
  /// Product computed only down to the given exponent floor (cheap when the
  /// full pessimistic window would be wide).
  LaurentSeries mul_floor(const LaurentSeries& o, long floor) const;

  /// Inverse of a series with known leading term, to `terms` retained
  /// coefficients (capped by the operand's own precision).
  LaurentSeries inverse(long terms) const;
  LaurentSeries div(const LaurentSeries& o, long terms) const;

  /// Multiply by t^k.
  LaurentSeries shift(long k) const;
  /// f^(q^s): exponent dilation by q^s (coefficients are fixed by Frobenius).
  LaurentSeries frobenius_dilate(unsigned s) const;
  /// j-th Hasse derivative, extended continuously: D_j(t^e) = C(e,j) t^(e-j).
  LaurentSeries hasse_derivative(unsigned j) const;

  /// Forget knowledge below the given exponent (raises the floor).
  LaurentSeries truncate_floor(long floor) const;
  /// Keep the part with exponents >= e, exactly (head extraction: the result
  /// is exact, being a finite sum of known monomials).
  LaurentSeries head_part(long e) const;
  /// The part with exponents < e (window inherited).
  LaurentSeries tail_part(long e) const;

  bool is_monic() const { return !vanishes() && c_.front() == 1; }
  LaurentSeries monic() const;

  /// Equality of all coefficients at exponents >= min_exp (both operands
  /// must know them).
  bool agrees_from(const LaurentSeries& o, long min_exp) const;
  /// Congruence mod t^(-N): agreement at exponents > -N.
  bool agrees_mod(const LaurentSeries& o, long N) const { return agrees_from(o, 1 - N); }

  /// True if every known coefficient at negative exponents vanishes and the
  /// floor reaches at least -depth (used for "lies in k[t] at precision").
  bool is_polynomial_at_precision(long depth) const;
  /// Exact polynomial part (exponents >= 0).
  FqPoly polynomial_part() const;

  bool operator==(const LaurentSeries& o) const {
    return F_ == o.F_ && floor_ == o.floor_ && c_ == o.c_ && (c_.empty() || lead_ == o.lead_);
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  const Fq* F_;
  long lead_;               // exponent of c_[0] when c_ is nonempty
  std::vector<fq_t> c_;     // highest exponent first
  long floor_;              // knowledge floor (kExactFloor when exact)
};

using LVec = std::vector<LaurentSeries>;

/// min of entry valuation lower bounds
long vec_val_lower_bound(const LVec& v);

}  // namespace tmod

#endif
