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

#ifndef TMOD_IRREDUCIBLES_HPP
#define TMOD_IRREDUCIBLES_HPP

#include <optional>

#include "tmod/fq_poly.hpp"

namespace tmod {

bool is_irreducible(const FqPoly& f);

/// Streams the monic irreducible polynomials of degree d over F_q in
/// lexicographic order of coefficient vectors.
class IrreducibleEnumerator {
 public:
  IrreducibleEnumerator(const Fq& F, int d);
  std::optional<FqPoly> next();

 private:
  const Fq& F_;
  int d_;
  unsigned long long code_, count_;
};

std::vector<FqPoly> monic_irreducibles(const Fq& F, int d);

/// All monic polynomials of degree d.
std::vector<FqPoly> monic_polys(const Fq& F, int d);

/// Necklace count (1/d) sum_{e|d} mu(e) q^(d/e).
unsigned long long irreducible_count(unsigned q, int d);

}  // namespace tmod

#endif
