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

#ifndef TMOD_BINOM_HPP
#define TMOD_BINOM_HPP

namespace tmod {

/// Binomial coefficient C(m, j) mod p for any integer m (negative allowed)
/// and j >= 0, via Lucas' theorem and C(m, j) = (-1)^j C(j - m - 1, j).
unsigned binom_mod_p(long m, unsigned j, unsigned p);

}  // namespace tmod

#endif
