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

#ifndef TMOD_ERRORS_HPP
#define TMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tmod {

/// Malformed input: schema violations, dimension mismatches, invalid module
/// data.  CLI exit code 1.
struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A result cannot be produced at the requested precision: reading past a
/// series window, uncertified truncation.  CLI exit code 2.
struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A method is inapplicable or failed to converge on otherwise valid input
/// (e != 1 for shtuka units, stabilization failures, head bound too small).
/// CLI exit code 3.
struct MethodError : std::runtime_error {
  explicit MethodError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tmod

#endif
