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

#include "tmod/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "tmod/binom.hpp"

namespace tmod {

void LaurentSeries::normalize() {
  while (!c_.empty() && c_.front() == 0) {
    c_.erase(c_.begin());
    --lead_;
  }
  if (is_exact()) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  if (c_.empty() && !is_exact()) lead_ = floor_ - 1;
}

LaurentSeries LaurentSeries::zero(const Fq& F) {
  LaurentSeries s;
  s.F_ = &F;
  s.floor_ = kExactFloor;
  s.lead_ = 0;
  return s;
}

LaurentSeries LaurentSeries::zero_at(const Fq& F, long floor) {
  LaurentSeries s;
  s.F_ = &F;
  s.floor_ = floor;
  s.lead_ = floor - 1;
  return s;
}

LaurentSeries LaurentSeries::monomial(const Fq& F, fq_t c, long e) {
  if (c == 0) return zero(F);
  LaurentSeries s;
  s.F_ = &F;
  s.floor_ = kExactFloor;
  s.lead_ = e;
  s.c_ = {c};
  return s;
}

LaurentSeries LaurentSeries::from_poly(const FqPoly& p) {
  LaurentSeries s;
  s.F_ = &p.field();
  s.floor_ = kExactFloor;
  if (p.is_zero()) {
    s.lead_ = 0;
    return s;
  }
  s.lead_ = p.degree();
  s.c_.assign(p.coeffs().rbegin(), p.coeffs().rend());
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::exact(const Fq& F, long lead, std::vector<fq_t> coeffs) {
  LaurentSeries s;
  s.F_ = &F;
  s.floor_ = kExactFloor;
  s.lead_ = lead;
  s.c_ = std::move(coeffs);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::windowed(const Fq& F, long lead, std::vector<fq_t> coeffs,
                                      long floor) {
  if (static_cast<long>(coeffs.size()) != lead - floor + 1)
    throw ValidationError("windowed series: coefficient count does not match window");
  LaurentSeries s;
  s.F_ = &F;
  s.floor_ = floor;
  s.lead_ = lead;
  s.c_ = std::move(coeffs);
  s.normalize();
  return s;
}

long LaurentSeries::lead() const {
  if (c_.empty()) throw PrecisionError("lead(): series has no known nonzero term");
  return lead_;
}

long LaurentSeries::val() const {
  if (!c_.empty()) return -lead_;
  if (is_exact()) return kValInf;
  throw PrecisionError("valuation undetermined at this precision");
}

long LaurentSeries::val_lower_bound() const {
  if (!c_.empty()) return -lead_;
  if (is_exact()) return kValInf;
  return 1 - floor_;
}

fq_t LaurentSeries::coeff(long e) const {
  if (e > support_bound()) return 0;
  if (is_exact()) {
    long tail = lead_ - static_cast<long>(c_.size()) + 1;
    if (e < tail) return 0;
    return c_[static_cast<size_t>(lead_ - e)];
  }
  if (e < floor_) throw PrecisionError("coefficient read below precision window");
  if (c_.empty() || e > lead_) return 0;
  return c_[static_cast<size_t>(lead_ - e)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  if (F_ != o.F_) throw ValidationError("field mismatch");
  const bool ex = is_exact() && o.is_exact();
  long newfloor = ex ? kExactFloor : std::max(floor_, o.floor_);
  long top = std::max(support_bound(), o.support_bound());
  long bottom;
  if (ex) {
    long t1 = c_.empty() ? top + 1 : lead_ - static_cast<long>(c_.size()) + 1;
    long t2 = o.c_.empty() ? top + 1 : o.lead_ - static_cast<long>(o.c_.size()) + 1;
    bottom = std::min(t1, t2);
  } else {
    bottom = newfloor;
  }
  if (bottom > top) return ex ? zero(*F_) : zero_at(*F_, newfloor);
  std::vector<fq_t> c(static_cast<size_t>(top - bottom + 1), 0);
  for (long e = top; e >= bottom; --e)
    c[static_cast<size_t>(top - e)] = F_->add(coeff(e), o.coeff(e));
  LaurentSeries r;
  r.F_ = F_;
  r.floor_ = newfloor;
  r.lead_ = top;
  r.c_ = std::move(c);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& x : r.c_) x = F_->neg(x);
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::mul_scalar(fq_t s) const {
  if (s == 0) return zero(*F_);
  LaurentSeries r = *this;
  for (auto& x : r.c_) x = F_->mul(x, s);
  return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  return mul_floor(o, kExactFloor);
}

LaurentSeries LaurentSeries::mul_floor(const LaurentSeries& o, long req_floor) const {
  if (F_ != o.F_) throw ValidationError("field mismatch");
  if (is_exact_zero() || o.is_exact_zero()) return zero(*F_);
  const bool ex = is_exact() && o.is_exact();
  const long s1 = support_bound(), s2 = o.support_bound();
  long newfloor;
  if (ex) {
    newfloor = kExactFloor;
  } else if (is_exact()) {
    newfloor = o.floor_ + s1;
  } else if (o.is_exact()) {
    newfloor = floor_ + s2;
  } else {
    newfloor = std::max(floor_ + s2, o.floor_ + s1);
  }
  newfloor = std::max(newfloor, req_floor);
  const long top = s1 + s2;
  long bottom;
  if (newfloor == kExactFloor) {
    long t1 = lead_ - static_cast<long>(c_.size()) + 1;
    long t2 = o.lead_ - static_cast<long>(o.c_.size()) + 1;
    bottom = t1 + t2;
  } else {
    bottom = newfloor;
  }
  if (c_.empty() || o.c_.empty() || bottom > top) {
    if (newfloor == kExactFloor) return zero(*F_);
    return zero_at(*F_, newfloor);
  }
  std::vector<fq_t> acc(static_cast<size_t>(top - bottom + 1), 0);
  const long t2low = o.lead_ - static_cast<long>(o.c_.size()) + 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    const fq_t ca = c_[i];
    if (ca == 0) continue;
    const long a = lead_ - static_cast<long>(i);
    // b ranges over o's stored exponents with a+b >= bottom
    const long bmin = std::max(t2low, bottom - a);
    if (bmin > o.lead_) continue;
    for (long b = o.lead_; b >= bmin; --b) {
      const fq_t cb = o.c_[static_cast<size_t>(o.lead_ - b)];
      if (cb == 0) continue;
      const size_t k = static_cast<size_t>(top - (a + b));
      acc[k] = F_->add(acc[k], F_->mul(ca, cb));
    }
  }
  LaurentSeries r;
  r.F_ = F_;
  r.floor_ = newfloor;
  r.lead_ = top;
  r.c_ = std::move(acc);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::inverse(long terms) const {
  if (is_exact_zero()) throw ValidationError("inverse of zero series");
  if (c_.empty()) throw PrecisionError("inverse of series with no known leading term");
  long T = terms;
  if (!is_exact()) T = std::min(T, precision());
  if (T < 1) throw PrecisionError("inverse requested with no retained terms");
  const long L = lead_;
  const fq_t a0inv = F_->inv(c_.front());
  std::vector<fq_t> g(static_cast<size_t>(T), 0);
  g[0] = a0inv;
  for (long k = 1; k < T; ++k) {
    // coefficient of t^(-L-k) in g from sum_{j=1..k} f_j g_{k-j}
    fq_t s = 0;
    const long maxj = std::min(k, static_cast<long>(c_.size()) - 1);
    for (long j = 1; j <= maxj; ++j) {
      const fq_t fj = c_[static_cast<size_t>(j)];
      if (fj == 0) continue;
      s = F_->add(s, F_->mul(fj, g[static_cast<size_t>(k - j)]));
    }
    g[static_cast<size_t>(k)] = F_->neg(F_->mul(a0inv, s));
  }
  LaurentSeries r;
  r.F_ = F_;
  r.lead_ = -L;
  r.c_ = std::move(g);
  r.floor_ = -L - (T - 1);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::div(const LaurentSeries& o, long terms) const {
  return *this * o.inverse(terms);
}

LaurentSeries LaurentSeries::shift(long k) const {
  LaurentSeries r = *this;
  r.lead_ += k;
  if (!r.is_exact()) r.floor_ += k;
  return r;
}

LaurentSeries LaurentSeries::frobenius_dilate(unsigned s) const {
  if (s == 0) return *this;
  long Q = 1;
  for (unsigned i = 0; i < s; ++i) Q *= static_cast<long>(F_->q());
  LaurentSeries r;
  r.F_ = F_;
  if (c_.empty()) {
    r.floor_ = is_exact() ? kExactFloor : (floor_ - 1) * Q + 1;
    r.lead_ = is_exact() ? 0 : r.floor_ - 1;
    return r;
  }
  r.lead_ = lead_ * Q;
  const long span = static_cast<long>(c_.size() - 1) * Q + 1;
  r.c_.assign(static_cast<size_t>(span), 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<size_t>(Q)] = c_[i];
  r.floor_ = is_exact() ? kExactFloor : (floor_ - 1) * Q + 1;
  if (!r.is_exact()) {
    // pad the window down to the new floor
    const long tail = r.lead_ - span + 1;
    if (tail > r.floor_) r.c_.resize(static_cast<size_t>(r.lead_ - r.floor_ + 1), 0);
  }
  return r;
}

LaurentSeries LaurentSeries::hasse_derivative(unsigned j) const {
  if (j == 0) return *this;
  LaurentSeries r;
  r.F_ = F_;
  r.floor_ = is_exact() ? kExactFloor : floor_ - static_cast<long>(j);
  if (c_.empty()) {
    r.lead_ = is_exact() ? 0 : r.floor_ - 1;
    return r;
  }
  r.lead_ = lead_ - static_cast<long>(j);
  r.c_.assign(c_.size(), 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const long e = lead_ - static_cast<long>(i);
    unsigned b = binom_mod_p(e, j, F_->p());
    if (b) r.c_[i] = F_->mul(F_->from_int(static_cast<long>(b)), c_[i]);
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::truncate_floor(long floor) const {
  if (is_exact()) {
    if (c_.empty()) return *this;
    long tail = lead_ - static_cast<long>(c_.size()) + 1;
    if (floor <= tail) return *this;
  } else if (floor <= floor_) {
    return *this;
  }
  LaurentSeries r;
  r.F_ = F_;
  r.floor_ = floor;
  if (c_.empty() || lead_ < floor) {
    r.lead_ = floor - 1;
    return r;
  }
  r.lead_ = lead_;
  r.c_.assign(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), static_cast<size_t>(lead_ - floor + 1)));
  r.c_.resize(static_cast<size_t>(lead_ - floor + 1), 0);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::head_part(long e) const {
  if (!knows(e)) throw PrecisionError("head_part below precision window");
  LaurentSeries r;
  r.F_ = F_;
  r.floor_ = kExactFloor;
  if (c_.empty() || lead_ < e) {
    r.lead_ = 0;
    return r;
  }
  r.lead_ = lead_;
  const size_t n = static_cast<size_t>(std::min<long>(static_cast<long>(c_.size()), lead_ - e + 1));
  r.c_.assign(c_.begin(), c_.begin() + n);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::tail_part(long e) const {
  LaurentSeries r;
  r.F_ = F_;
  r.floor_ = floor_;
  long top = std::min(support_bound(), e - 1);
  if (c_.empty() || top < lead_ - static_cast<long>(c_.size()) + 1) {
    if (is_exact()) return zero(*F_);
    r.lead_ = floor_ - 1;
    return r;
  }
  r.lead_ = top;
  const long tail = is_exact() ? lead_ - static_cast<long>(c_.size()) + 1 : floor_;
  r.c_.assign(c_.begin() + static_cast<size_t>(lead_ - top), c_.begin() + static_cast<size_t>(lead_ - tail + 1));
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::monic() const {
  if (c_.empty()) throw PrecisionError("monic(): series has no known leading term");
  return mul_scalar(F_->inv(c_.front()));
}

bool LaurentSeries::agrees_from(const LaurentSeries& o, long min_exp) const {
  if (!knows(min_exp) || !o.knows(min_exp))
    throw PrecisionError("comparison window exceeds series precision");
  long top = std::max(support_bound(), o.support_bound());
  for (long e = top; e >= min_exp; --e)
    if (coeff(e) != o.coeff(e)) return false;
  return true;
}

bool LaurentSeries::is_polynomial_at_precision(long depth) const {
  if (!knows(-depth)) throw PrecisionError("insufficient certified coefficients");
  long bottom = is_exact() ? std::min(-depth, support_bound()) : floor_;
  for (long e = std::min(support_bound(), -1L); e >= bottom; --e)
    if (coeff(e) != 0) return false;
  return true;
}

FqPoly LaurentSeries::polynomial_part() const {
  LaurentSeries h = head_part(0);
  if (h.vanishes()) return FqPoly::zero(*F_);
  std::vector<fq_t> c(static_cast<size_t>(h.lead() + 1), 0);
  for (long e = 0; e <= h.lead(); ++e) c[static_cast<size_t>(e)] = h.coeff(e);
  return FqPoly(*F_, std::move(c));
}

std::string LaurentSeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  if (!c_.empty()) {
    const long tail = lead_ - static_cast<long>(c_.size()) + 1;
    for (long e = lead_; e >= tail; --e) {
      fq_t c = c_[static_cast<size_t>(lead_ - e)];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (e == 0) {
        os << F_->to_string(c);
      } else {
        if (c != 1) os << F_->to_string(c) << "*";
        os << var;
        if (e != 1) os << "^" << e;
      }
    }
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(" << var << "^" << floor_ - 1 << ")";
  return os.str();
}

long vec_val_lower_bound(const LVec& v) {
  long m = kValInf;
  for (const auto& s : v) m = std::min(m, s.val_lower_bound());
  return m;
}

}  // namespace tmod
