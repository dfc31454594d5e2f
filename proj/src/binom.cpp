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

#include "tmod/binom.hpp"

namespace tmod {

namespace {

unsigned small_binom_mod_p(unsigned m, unsigned j, unsigned p) {
  // m, j < p: direct product formula
  if (j > m) return 0;
  unsigned long long num = 1, den = 1;
  for (unsigned i = 0; i < j; ++i) {
    num = (num * ((m - i) % p)) % p;
    den = (den * ((i + 1) % p)) % p;
  }
  // den is invertible mod p
  unsigned long long inv = 1, base = den, e = p - 2;
  while (e) {
    if (e & 1) inv = (inv * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return static_cast<unsigned>((num * inv) % p);
}

unsigned lucas(unsigned long long m, unsigned long long j, unsigned p) {
  unsigned long long r = 1;
  while (j > 0 || m > 0) {
    unsigned md = static_cast<unsigned>(m % p), jd = static_cast<unsigned>(j % p);
    r = (r * small_binom_mod_p(md, jd, p)) % p;
    if (r == 0) return 0;
    m /= p;
    j /= p;
  }
  return static_cast<unsigned>(r);
}

}  // namespace

unsigned binom_mod_p(long m, unsigned j, unsigned p) {
  if (j == 0) return 1;
  if (m >= 0) {
    if (static_cast<long>(j) > m) return 0;
    return lucas(static_cast<unsigned long long>(m), j, p);
  }
  // C(m, j) = (-1)^j C(j - m - 1, j) for m < 0
  unsigned long long top = static_cast<unsigned long long>(static_cast<long long>(j) - m - 1);
  unsigned v = lucas(top, j, p);
  if (j % 2 == 1 && p != 2) v = (p - v) % p;
  return v;
}

}  // namespace tmod
