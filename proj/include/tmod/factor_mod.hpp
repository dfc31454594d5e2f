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

#ifndef TMOD_FACTOR_MOD_HPP
#define TMOD_FACTOR_MOD_HPP

#include <utility>
#include <vector>

#include "tmod/fq_poly.hpp"

namespace tmod {

/// Polynomial in y over the residue field k[t]/(pi): y-coefficients
/// lowest-first, each reduced mod pi.
using RPoly = std::vector<FqPoly>;

struct FactorModResult {
  bool squarefree = true;
  /// monic irreducible factors over k[t]/(pi) with multiplicities,
  /// deterministically ordered
  std::vector<std::pair<RPoly, int>> factors;
};

/// Complete factorization of a monic f in y over k[t]/(pi)
/// (distinct-degree then equal-degree splitting).
FactorModResult factor_mod(const RPoly& f, const FqPoly& pi);

/// Product of factors with multiplicity, reduced mod pi (oracle support).
RPoly rpoly_product(const FactorModResult& r, const FqPoly& pi);

RPoly rpoly_reduce(const RPoly& f, const FqPoly& pi);
bool rpoly_equal(const RPoly& a, const RPoly& b);
int rpoly_degree(const RPoly& f);

}  // namespace tmod

#endif
