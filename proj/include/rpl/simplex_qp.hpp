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

#include <vector>

namespace rpl {

/// Minimizes c.l + (1/2) l.Q.l over the probability simplex by a primal
/// active-set method. Q is K x K, row-major, symmetric positive semidefinite.
std::vector<double> solve_simplex_qp(const std::vector<double>& Q, const std::vector<double>& c);

}  // namespace rpl
