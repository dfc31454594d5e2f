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

#include "tmod/fq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace tmod {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, lowest-first, used only while
// building tables.
using PPoly = std::vector<fq_t>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& mod, unsigned p) {
  PPoly r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<fq_t>((r[i + j] + a[i] * b[j]) % p);
  // reduce mod the monic modulus
  const size_t m = mod.size() - 1;
  for (size_t d = r.size(); d-- > m;) {
    unsigned c = r[d];
    if (c == 0) continue;
    // subtract r[d] * x^(d-m) * mod
    for (size_t j = 0; j <= m; ++j) {
      unsigned sub = (c * mod[j]) % p;
      r[d - m + j] = static_cast<fq_t>((r[d - m + j] + p - sub) % p);
    }
  }
  r.resize(m, 0);
  ptrim(r);
  return r;
}

bool p_irreducible(const PPoly& f, unsigned p) {
  // trial division by all monic polynomials of degree <= deg(f)/2
  const size_t deg = f.size() - 1;
  for (size_t d = 1; 2 * d <= deg; ++d) {
    // enumerate monic polys of degree d over F_p
    unsigned long long count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (unsigned long long code = 0; code < count; ++code) {
      PPoly g(d + 1, 0);
      unsigned long long c = code;
      for (size_t i = 0; i < d; ++i) {
        g[i] = static_cast<fq_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      // long division remainder f mod g
      PPoly r = f;
      while (r.size() >= g.size()) {
        unsigned lead = r.back();
        if (lead != 0) {
          size_t shift = r.size() - g.size();
          // r -= lead * inv(lc g = 1) * x^shift * g
          for (size_t j = 0; j < g.size(); ++j) {
            unsigned sub = (lead * g[j]) % p;
            r[shift + j] = static_cast<fq_t>((r[shift + j] + p - sub) % p);
          }
        }
        r.pop_back();
      }
      ptrim(r);
      if (r.empty()) return false;
    }
  }
  return true;
}

PPoly default_modulus(unsigned p, unsigned f) {
  if (f == 1) return PPoly{0, 1};  // x, so F_p[x]/(x) = F_p
  unsigned long long count = 1;
  for (unsigned i = 0; i < f; ++i) count *= p;
  for (unsigned long long code = 0; code < count; ++code) {
    PPoly g(f + 1, 0);
    unsigned long long c = code;
    for (unsigned i = 0; i < f; ++i) {
      g[i] = static_cast<fq_t>(c % p);
      c /= p;
    }
    g[f] = 1;
    if (p_irreducible(g, p)) return g;
  }
  throw ValidationError("no irreducible modulus found");  // unreachable
}

}  // namespace

Fq::Fq(unsigned p, std::vector<fq_t> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw ValidationError("field characteristic must be prime");
  if (modulus_.empty() || modulus_.back() != 1)
    throw ValidationError("field modulus must be monic");
  f_ = static_cast<unsigned>(modulus_.size() - 1);
  unsigned long long q = 1;
  for (unsigned i = 0; i < f_; ++i) q *= p_;
  if (q > 256) throw ValidationError("field size exceeds 256");
  q_ = static_cast<unsigned>(q);
  if (f_ > 1 && !p_irreducible(modulus_, p_))
    throw ValidationError("field modulus is not irreducible");

  // element code <-> F_p coefficient vector: code = sum c_i p^i
  auto decode = [&](fq_t a) {
    PPoly c(f_, 0);
    for (unsigned i = 0; i < f_; ++i) {
      c[i] = static_cast<fq_t>(a % p_);
      a = static_cast<fq_t>(a / p_);
    }
    return c;
  };
  auto encode = [&](const PPoly& c) {
    unsigned code = 0, w = 1;
    for (size_t i = 0; i < c.size(); ++i) {
      code += c[i] * w;
      w *= p_;
    }
    return static_cast<fq_t>(code);
  };

  add_.resize(static_cast<size_t>(q_) * q_);
  mul_.resize(static_cast<size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.resize(q_, 0);
  frob_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    PPoly ca = decode(static_cast<fq_t>(a));
    PPoly na(f_, 0);
    for (unsigned i = 0; i < f_; ++i) na[i] = static_cast<fq_t>((p_ - ca[i]) % p_);
    neg_[a] = encode(na);
    for (unsigned b = 0; b < q_; ++b) {
      PPoly cb = decode(static_cast<fq_t>(b));
      PPoly s(f_, 0);
      for (unsigned i = 0; i < f_; ++i) s[i] = static_cast<fq_t>((ca[i] + cb[i]) % p_);
      add_[a * q_ + b] = encode(s);
      PPoly m = pmulmod(ca, cb, modulus_, p_);
      m.resize(f_, 0);
      mul_[a * q_ + b] = encode(m);
    }
  }
  auto tpow = [&](fq_t a, unsigned e) {
    fq_t r = 1, base = a;
    while (e) {
      if (e & 1) r = mul_[r * q_ + base];
      base = mul_[base * q_ + base];
      e >>= 1;
    }
    return r;
  };
  for (unsigned a = 1; a < q_; ++a) {
    inv_[a] = tpow(static_cast<fq_t>(a), q_ - 2);
    frob_[a] = tpow(static_cast<fq_t>(a), p_);
  }
  frob_[0] = 0;
}

fq_t Fq::inv(fq_t a) const {
  if (a == 0) throw ValidationError("division by zero in F_q");
  return inv_[a];
}

fq_t Fq::pow(fq_t a, unsigned long long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  e %= (q_ - 1);
  fq_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

fq_t Fq::from_int(long v) const {
  long m = v % static_cast<long>(p_);
  if (m < 0) m += p_;
  return static_cast<fq_t>(m);
}

fq_t Fq::from_coeffs(const std::vector<fq_t>& c) const {
  if (c.size() > f_) throw ValidationError("F_q element has too many F_p coefficients");
  unsigned code = 0, w = 1;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) throw ValidationError("F_p coefficient out of range");
    code += c[i] * w;
    w *= p_;
  }
  return static_cast<fq_t>(code);
}

std::vector<fq_t> Fq::to_coeffs(fq_t a) const {
  std::vector<fq_t> c(f_, 0);
  for (unsigned i = 0; i < f_; ++i) {
    c[i] = static_cast<fq_t>(a % p_);
    a = static_cast<fq_t>(a / p_);
  }
  return c;
}

std::string Fq::to_string(fq_t a) const {
  if (f_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << "[";
  auto c = to_coeffs(a);
  for (unsigned i = 0; i < f_; ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << "]";
  return os.str();
}

const Fq& Fq::get(unsigned q) {
  unsigned p = 2;
  while (q % p != 0) {
    ++p;
    if (p > q) throw ValidationError("invalid field size");
  }
  unsigned f = 0, r = q;
  while (r > 1) {
    if (r % p != 0) throw ValidationError("field size is not a prime power");
    r /= p;
    ++f;
  }
  return get(p, default_modulus(p, f));
}

const Fq& Fq::get(unsigned p, const std::vector<fq_t>& modulus) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, std::vector<fq_t>>, std::unique_ptr<Fq>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, modulus);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<Fq>(new Fq(p, modulus))).first;
  return *it->second;
}

}  // namespace tmod
