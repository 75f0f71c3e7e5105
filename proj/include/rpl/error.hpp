/* Copyright 2026 The rieszpol Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace rpl {

// Argument outside the mathematical domain of a function (x <= 0 for gamma,
// p <= 1 for zeta, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Parameter outside the range where a closed-form formula is valid.
struct RangeError : std::range_error {
  using std::range_error::range_error;
};

// No proven or conjectured constant is available for the requested bound.
struct UnavailableConstantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedExponentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation point too close to a node for a derivative-based functional.
struct ProximityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoincidentPointsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonconvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace rpl
