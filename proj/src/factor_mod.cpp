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

#include "tmod/factor_mod.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tmod {

namespace {

// arithmetic in K = F_q[t]/(pi)
struct Residue {
  const Fq& F;
  const FqPoly& pi;
  FqPoly red(const FqPoly& a) const { return a % pi; }
  FqPoly mul(const FqPoly& a, const FqPoly& b) const { return (a * b) % pi; }
  FqPoly inv(const FqPoly& a) const {
    FqPoly u(F), v(F);
    FqPoly g = FqPoly::xgcd(a % pi, pi, u, v);
    if (g.degree() != 0) throw ValidationError("non-invertible element mod pi");
    return u % pi;
  }
  unsigned long long card_bits_checked() const {
    // |K| = q^deg(pi); keep exponent arithmetic inside 64 bits
    unsigned long long Q = 1;
    for (int i = 0; i < pi.degree(); ++i) {
      if (Q > (1ULL << 56) / F.q()) throw ValidationError("factor_mod: residue field too large");
      Q *= F.q();
    }
    return Q;
  }
};

void rtrim(RPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

RPoly rzero() { return {}; }

bool ris_zero(const RPoly& f) { return f.empty(); }

RPoly rmul(const Residue& K, const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return rzero();
  RPoly r(a.size() + b.size() - 1, FqPoly::zero(K.F));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = K.red(r[i + j] + a[i] * b[j]);
  }
  rtrim(r);
  return r;
}

RPoly rsub(const Residue& K, const RPoly& a, const RPoly& b) {
  RPoly r(std::max(a.size(), b.size()), FqPoly::zero(K.F));
  for (size_t i = 0; i < r.size(); ++i) {
    FqPoly x = i < a.size() ? a[i] : FqPoly::zero(K.F);
    FqPoly y = i < b.size() ? b[i] : FqPoly::zero(K.F);
    r[i] = K.red(x - y);
  }
  rtrim(r);
  return r;
}

RPoly radd(const Residue& K, const RPoly& a, const RPoly& b) {
  RPoly r(std::max(a.size(), b.size()), FqPoly::zero(K.F));
  for (size_t i = 0; i < r.size(); ++i) {
    FqPoly x = i < a.size() ? a[i] : FqPoly::zero(K.F);
    FqPoly y = i < b.size() ? b[i] : FqPoly::zero(K.F);
    r[i] = K.red(x + y);
  }
  rtrim(r);
  return r;
}

RPoly rmonic(const Residue& K, const RPoly& f) {
  if (f.empty()) return f;
  FqPoly lcinv = K.inv(f.back());
  RPoly r = f;
  for (auto& c : r) c = K.mul(c, lcinv);
  return r;
}

// divmod by monic divisor
std::pair<RPoly, RPoly> rdivmod(const Residue& K, const RPoly& a, const RPoly& d) {
  if (d.empty()) throw ValidationError("division by zero y-polynomial");
  RPoly q, r = a;
  rtrim(r);
  if (r.size() < d.size()) return {rzero(), r};
  FqPoly lcinv = K.inv(d.back());
  q.assign(r.size() - d.size() + 1, FqPoly::zero(K.F));
  while (r.size() >= d.size()) {
    FqPoly c = K.mul(r.back(), lcinv);
    size_t shift = r.size() - d.size();
    if (!c.is_zero()) {
      q[shift] = c;
      for (size_t j = 0; j < d.size(); ++j) r[shift + j] = K.red(r[shift + j] - c * d[j]);
    }
    r.pop_back();
    rtrim(r);
    if (r.empty()) break;
  }
  rtrim(q);
  return {q, r};
}

RPoly rmod(const Residue& K, const RPoly& a, const RPoly& d) { return rdivmod(K, a, d).second; }

RPoly rgcd(const Residue& K, RPoly a, RPoly b) {
  rtrim(a);
  rtrim(b);
  while (!b.empty()) {
    RPoly m = rmod(K, a, rmonic(K, b));
    a = b;
    b = m;
  }
  return a.empty() ? a : rmonic(K, a);
}

RPoly rpow_mod(const Residue& K, RPoly base, unsigned long long e, const RPoly& m) {
  RPoly r{FqPoly::one(K.F)};
  base = rmod(K, base, m);
  while (e) {
    if (e & 1) r = rmod(K, rmul(K, r, base), m);
    base = rmod(K, rmul(K, base, base), m);
    e >>= 1;
  }
  return r;
}

RPoly rderivative(const Residue& K, const RPoly& f) {
  RPoly r;
  for (size_t i = 1; i < f.size(); ++i) {
    FqPoly c = f[i].mul_scalar(K.F.from_int(static_cast<long>(i)));
    r.push_back(K.red(c));
  }
  rtrim(r);
  return r;
}

// p-th root of an element of K (Frobenius is bijective on a finite field)
FqPoly kth_root_p(const Residue& K, const FqPoly& a) {
  // x -> x^p permutes K with inverse x -> x^(|K|/p)
  unsigned long long Q = K.card_bits_checked();
  return FqPoly::pow_mod(a, Q / K.F.p(), K.pi);
}

bool rless(const RPoly& a, const RPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = a.size(); i-- > 0;) {
    const auto& ca = a[i].coeffs();
    const auto& cb = b[i].coeffs();
    if (ca != cb) return ca < cb;
  }
  return false;
}

// equal-degree splitting of a monic squarefree g, all factors of degree k
void edf(const Residue& K, const RPoly& g, int k, std::mt19937_64& rng,
         std::vector<RPoly>& out) {
  const int deg = static_cast<int>(g.size()) - 1;
  if (deg == k) {
    out.push_back(g);
    return;
  }
  const unsigned long long Q = K.card_bits_checked();
  // guard exponent overflow for Q^k
  long double bits = static_cast<long double>(k) * std::log2(static_cast<long double>(Q));
  if (bits > 62) throw ValidationError("factor_mod: equal-degree split exponent too large");
  RPoly h;
  for (;;) {
    // random h of degree < deg
    h.clear();
    for (int i = 0; i < deg; ++i) {
      std::vector<fq_t> c(static_cast<size_t>(std::max(K.pi.degree(), 1)), 0);
      for (auto& x : c) x = static_cast<fq_t>(rng() % K.F.q());
      h.push_back(K.red(FqPoly(K.F, c)));
    }
    rtrim(h);
    if (h.empty() || (h.size() == 1 && h[0].degree() <= 0)) continue;
    RPoly w;
    if (K.F.p() == 2) {
      // trace map sum h^(2^i), i < log2(Q^k)
      unsigned long long m = 0, t = Q;
      while (t > 1) {
        t >>= 1;
        ++m;
      }
      m *= static_cast<unsigned long long>(k);
      RPoly acc = rmod(K, h, g), cur = acc;
      for (unsigned long long i = 1; i < m; ++i) {
        cur = rmod(K, rmul(K, cur, cur), g);
        acc = radd(K, acc, cur);
      }
      w = acc;
    } else {
      unsigned long long e = 1;
      for (int i = 0; i < k; ++i) e *= Q;
      e = (e - 1) / 2;
      RPoly we = rpow_mod(K, h, e, g);
      w = rsub(K, we, RPoly{FqPoly::one(K.F)});
    }
    RPoly d = rgcd(K, w, g);
    if (!d.empty() && static_cast<int>(d.size()) - 1 > 0 &&
        static_cast<int>(d.size()) - 1 < deg) {
      auto [quot, rem] = rdivmod(K, g, d);
      (void)rem;
      edf(K, rmonic(K, d), k, rng, out);
      edf(K, rmonic(K, quot), k, rng, out);
      return;
    }
  }
}

}  // namespace

RPoly rpoly_reduce(const RPoly& f, const FqPoly& pi) {
  RPoly r;
  r.reserve(f.size());
  for (const auto& c : f) r.push_back(c % pi);
  rtrim(r);
  return r;
}

bool rpoly_equal(const RPoly& a, const RPoly& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

int rpoly_degree(const RPoly& f) { return f.empty() ? kNegInfDeg : static_cast<int>(f.size()) - 1; }

FactorModResult factor_mod(const RPoly& f_in, const FqPoly& pi) {
  const Fq& F = pi.field();
  if (pi.degree() < 1 || !pi.is_monic()) throw ValidationError("factor_mod: pi must be monic of degree >= 1");
  Residue K{F, pi};
  RPoly f = rpoly_reduce(f_in, pi);
  if (f.empty()) throw ValidationError("factor_mod: f vanishes mod pi");
  if (!f.back().is_one()) f = rmonic(K, f);  // pi is irreducible, so lc is a unit
  FactorModResult out;
  if (rpoly_degree(f) == 0) return out;

  std::mt19937_64 rng(0x746d6f64u);  // fixed seed: deterministic factorizations

  // multiplicity loop: strip repeated factors via gcd with the derivative
  RPoly work = f;
  std::vector<std::pair<RPoly, int>> raw;
  int mult_scale = 1;
  while (rpoly_degree(work) > 0) {
    RPoly dw = rderivative(K, work);
    RPoly sqfree;
    if (ris_zero(dw)) {
      // work = g(y^p): take p-th root and scale multiplicities
      RPoly root;
      const unsigned p = F.p();
      for (size_t i = 0; i < work.size(); i += p) root.push_back(kth_root_p(K, work[i]));
      rtrim(root);
      work = root;
      mult_scale *= static_cast<int>(p);
      continue;
    }
    RPoly g = rgcd(K, work, dw);
    sqfree = rpoly_degree(g) == 0 ? work : rdivmod(K, work, g).first;
    // distinct-degree on the squarefree part
    RPoly rest = rmonic(K, sqfree);
    const unsigned long long Q = K.card_bits_checked();
    RPoly h{FqPoly::zero(F), FqPoly::one(F)};  // y
    RPoly y = h;
    int k = 1;
    while (rpoly_degree(rest) >= 2 * k) {
      h = rpow_mod(K, h, Q, rest);
      RPoly d = rgcd(K, rsub(K, h, y), rest);
      if (rpoly_degree(d) > 0) {
        std::vector<RPoly> eq;
        edf(K, rmonic(K, d), k, rng, eq);
        for (auto& e : eq) raw.emplace_back(std::move(e), mult_scale);
        rest = rdivmod(K, rest, d).first;
        h = rmod(K, h, rest);
      }
      ++k;
    }
    if (rpoly_degree(rest) > 0) raw.emplace_back(rmonic(K, rest), mult_scale);
    // remove the found squarefree part from work and continue with the gcd
    work = g;
  }

  // merge equal factors, sort deterministically
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return rless(a.first, b.first); });
  for (auto& [fac, m] : raw) {
    if (!out.factors.empty() && rpoly_equal(out.factors.back().first, fac))
      out.factors.back().second += m;
    else
      out.factors.emplace_back(fac, m);
  }
  // recompute true multiplicities by trial division (the gcd cascade only
  // bounds them)
  RPoly full = rpoly_reduce(f_in, pi);
  full = rmonic(K, full);
  for (auto& [fac, m] : out.factors) {
    m = 0;
    RPoly cur = full;
    for (;;) {
      auto [q, r] = rdivmod(K, cur, fac);
      if (!ris_zero(r)) break;
      ++m;
      cur = q;
    }
  }
  out.squarefree = true;
  for (auto& [fac, m] : out.factors)
    if (m > 1) out.squarefree = false;
  return out;
}

RPoly rpoly_product(const FactorModResult& r, const FqPoly& pi) {
  const Fq& F = pi.field();
  Residue K{F, pi};
  RPoly acc{FqPoly::one(F)};
  for (const auto& [fac, m] : r.factors)
    for (int i = 0; i < m; ++i) acc = rmul(K, acc, fac);
  return acc;
}

}  // namespace tmod
