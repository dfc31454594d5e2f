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

#include "tmod/fq_poly.hpp"

#include <sstream>

#include "tmod/binom.hpp"

namespace tmod {

FqPoly::FqPoly(const Fq& F, std::vector<fq_t> coeffs) : F_(&F), c_(std::move(coeffs)) {
  for (fq_t x : c_)
    if (x >= F.q()) throw ValidationError("polynomial coefficient out of field range");
  trim();
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::t_pow(const Fq& F, int k) {
  if (k < 0) throw ValidationError("t_pow: negative exponent");
  std::vector<fq_t> c(k + 1, 0);
  c[k] = 1;
  return FqPoly(F, std::move(c));
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
  if (F_ != o.F_) throw ValidationError("field mismatch");
  FqPoly r(*F_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  r.trim();
  return r;
}

FqPoly FqPoly::operator-(const FqPoly& o) const { return *this + (-o); }

FqPoly FqPoly::operator-() const {
  FqPoly r(*F_);
  r.c_ = c_;
  for (auto& x : r.c_) x = F_->neg(x);
  return r;
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
  if (F_ != o.F_) throw ValidationError("field mismatch");
  if (is_zero() || o.is_zero()) return zero(*F_);
  FqPoly r(*F_);
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
  }
  r.trim();
  return r;
}

FqPoly FqPoly::mul_scalar(fq_t s) const {
  if (s == 0) return zero(*F_);
  FqPoly r(*F_);
  r.c_ = c_;
  for (auto& x : r.c_) x = F_->mul(x, s);
  return r;
}

FqPoly operator*(fq_t s, const FqPoly& p) { return p.mul_scalar(s); }

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& d) const {
  if (F_ != d.F_) throw ValidationError("field mismatch");
  if (d.is_zero()) throw ValidationError("polynomial division by zero");
  FqPoly q(*F_), r = *this;
  if (degree() < d.degree()) return {q, r};
  q.c_.assign(c_.size() - d.c_.size() + 1, 0);
  const fq_t dinv = F_->inv(d.lc());
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    fq_t coef = F_->mul(r.lc(), dinv);
    q.c_[shift] = coef;
    // r -= coef * t^shift * d
    for (size_t j = 0; j < d.c_.size(); ++j)
      r.c_[shift + j] = F_->sub(r.c_[shift + j], F_->mul(coef, d.c_[j]));
    r.trim();
  }
  q.trim();
  return {q, r};
}

bool FqPoly::divisible_by(const FqPoly& o) const { return divmod(o).second.is_zero(); }

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return mul_scalar(F_->inv(lc()));
}

FqPoly FqPoly::shift(int k) const {
  if (k < 0) throw ValidationError("shift: negative exponent");
  if (is_zero()) return *this;
  FqPoly r(*F_);
  r.c_.assign(c_.size() + k, 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

fq_t FqPoly::eval(fq_t x) const {
  fq_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
  return acc;
}

FqPoly FqPoly::frobenius_dilate(unsigned s, unsigned q_base) const {
  // Coefficients lie in F_q, so c^(q^s) = c and only exponents dilate.
  if (s == 0 || is_zero()) return *this;
  unsigned long long step = 1;
  for (unsigned i = 0; i < s; ++i) step *= q_base;
  FqPoly r(*F_);
  r.c_.assign((c_.size() - 1) * step + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * step] = c_[i];
  return r;
}

FqPoly FqPoly::hasse_derivative(unsigned j) const {
  if (j == 0) return *this;
  FqPoly r(*F_);
  if (static_cast<int>(j) > degree()) return r;
  r.c_.assign(c_.size() - j, 0);
  for (size_t m = j; m < c_.size(); ++m) {
    fq_t b = binom_mod_p(static_cast<long>(m), j, F_->p());
    if (b && c_[m]) r.c_[m - j] = F_->mul(F_->from_int(b), c_[m]);
  }
  r.trim();
  return r;
}

FqPoly FqPoly::gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

FqPoly FqPoly::xgcd(const FqPoly& a, const FqPoly& b, FqPoly& u, FqPoly& v) {
  const Fq& F = a.field();
  FqPoly r0 = a, r1 = b;
  FqPoly s0 = one(F), s1 = zero(F), t0 = zero(F), t1 = one(F);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    FqPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (!r0.is_zero()) {
    fq_t inv = F.inv(r0.lc());
    r0 = r0.mul_scalar(inv);
    s0 = s0.mul_scalar(inv);
    t0 = t0.mul_scalar(inv);
  }
  u = s0;
  v = t0;
  return r0;
}

FqPoly FqPoly::pow_mod(const FqPoly& base, unsigned long long e, const FqPoly& m) {
  FqPoly r = one(base.field());
  FqPoly b = base % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

std::string FqPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  const Fq& F = *F_;
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1)
      os << F.to_string(c_[i]) << (i == 0 ? "" : "*");
    if (i == 1)
      os << var;
    else if (i > 1)
      os << var << "^" << i;
  }
  return os.str();
}

}  // namespace tmod
