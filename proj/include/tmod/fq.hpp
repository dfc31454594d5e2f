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

#ifndef TMOD_FQ_HPP
#define TMOD_FQ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tmod/errors.hpp"

namespace tmod {

using fq_t = std::uint16_t;

/// The finite field F_q, q = p^f <= 256, in polynomial basis over F_p with
/// full lookup tables.  Instances are interned and immortal: hold them by
/// const reference or pointer and compare fields by address.
class Fq {
 public:
  /// Field with q elements and the lexicographically smallest monic
  /// irreducible modulus of degree f over F_p.
  static const Fq& get(unsigned q);
  /// Field F_p[x]/(modulus); modulus coefficients lowest-first, monic.
  static const Fq& get(unsigned p, const std::vector<fq_t>& modulus);

  unsigned p() const { return p_; }
  unsigned f() const { return f_; }
  unsigned q() const { return q_; }
  const std::vector<fq_t>& modulus() const { return modulus_; }

  fq_t add(fq_t a, fq_t b) const { return add_[a * q_ + b]; }
  fq_t sub(fq_t a, fq_t b) const { return add_[a * q_ + neg_[b]]; }
  fq_t mul(fq_t a, fq_t b) const { return mul_[a * q_ + b]; }
  fq_t neg(fq_t a) const { return neg_[a]; }
  fq_t inv(fq_t a) const;
  fq_t div(fq_t a, fq_t b) const { return mul(a, inv(b)); }
  /// x -> x^p
  fq_t frobenius(fq_t a) const { return frob_[a]; }
  fq_t pow(fq_t a, unsigned long long e) const;

  /// Embedding of integers via reduction mod p.
  fq_t from_int(long v) const;
  /// Element from coefficient vector over F_p, lowest-first.
  fq_t from_coeffs(const std::vector<fq_t>& c) const;
  std::vector<fq_t> to_coeffs(fq_t a) const;

  std::string to_string(fq_t a) const;

  Fq(const Fq&) = delete;
  Fq& operator=(const Fq&) = delete;

 private:
  Fq(unsigned p, std::vector<fq_t> modulus);

  unsigned p_, f_, q_;
  std::vector<fq_t> modulus_;
  std::vector<fq_t> add_, mul_, neg_, inv_, frob_;
};

}  // namespace tmod

#endif
