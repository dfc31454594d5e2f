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

#include "tmod/irreducibles.hpp"

namespace tmod {

bool is_irreducible(const FqPoly& f) {
  const Fq& F = f.field();
  const int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  // Rabin: x^(q^d) = x mod f, and gcd(x^(q^(d/l)) - x, f) = 1 for primes l | d
  const FqPoly x = FqPoly::t(F);
  // iterated Frobenius powers x^(q^i) mod f
  std::vector<FqPoly> frob(static_cast<size_t>(d) + 1);
  frob[0] = x % f;
  for (int i = 1; i <= d; ++i) frob[i] = FqPoly::pow_mod(frob[i - 1], F.q(), f);
  if (!(frob[static_cast<size_t>(d)] - x).is_zero()) return false;
  for (int l = 2; l <= d; ++l) {
    if (d % l != 0) continue;
    bool lprime = true;
    for (int m = 2; m * m <= l; ++m)
      if (l % m == 0) lprime = false;
    if (!lprime) continue;
    FqPoly g = FqPoly::gcd(frob[static_cast<size_t>(d / l)] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

IrreducibleEnumerator::IrreducibleEnumerator(const Fq& F, int d) : F_(F), d_(d), code_(0) {
  if (d < 1) throw ValidationError("irreducible enumeration requires degree >= 1");
  count_ = 1;
  for (int i = 0; i < d; ++i) count_ *= F.q();
}

std::optional<FqPoly> IrreducibleEnumerator::next() {
  while (code_ < count_) {
    std::vector<fq_t> c(static_cast<size_t>(d_) + 1, 0);
    unsigned long long v = code_++;
    for (int i = 0; i < d_; ++i) {
      c[static_cast<size_t>(i)] = static_cast<fq_t>(v % F_.q());
      v /= F_.q();
    }
    c[static_cast<size_t>(d_)] = 1;
    FqPoly f(F_, std::move(c));
    if (is_irreducible(f)) return f;
  }
  return std::nullopt;
}

std::vector<FqPoly> monic_irreducibles(const Fq& F, int d) {
  IrreducibleEnumerator en(F, d);
  std::vector<FqPoly> out;
  while (auto f = en.next()) out.push_back(*f);
  return out;
}

std::vector<FqPoly> monic_polys(const Fq& F, int d) {
  std::vector<FqPoly> out;
  unsigned long long count = 1;
  for (int i = 0; i < d; ++i) count *= F.q();
  for (unsigned long long code = 0; code < count; ++code) {
    std::vector<fq_t> c(static_cast<size_t>(d) + 1, 0);
    unsigned long long v = code;
    for (int i = 0; i < d; ++i) {
      c[static_cast<size_t>(i)] = static_cast<fq_t>(v % F.q());
      v /= F.q();
    }
    c[static_cast<size_t>(d)] = 1;
    out.emplace_back(F, std::move(c));
  }
  return out;
}

unsigned long long irreducible_count(unsigned q, int d) {
  auto mu = [](int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
      }
    }
    if (n > 1) r = -r;
    return r;
  };
  long long sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int m = mu(e);
    if (m == 0) continue;
    unsigned long long pw = 1;
    for (int i = 0; i < d / e; ++i) pw *= q;
    sum += m * static_cast<long long>(pw);
  }
  return static_cast<unsigned long long>(sum / d);
}

}  // namespace tmod
