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

#include <cmath>

namespace rpl {

// Safeguarded Newton: keeps a sign bracket and bisects whenever the Newton
// step leaves it or fails to shrink it.
template <class D1, class D2>
double monotone_root(D1 dfun, D2 d2fun, double lo, double hi, bool decreasing) {
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 400; ++it) {
    const double g = dfun(x);
    if (g == 0.0) return x;
    const bool go_right = decreasing ? (g > 0.0) : (g < 0.0);
    if (go_right) {
      lo = x;
    } else {
      hi = x;
    }
    const double h = d2fun(x);
    double next = (h != 0.0 && std::isfinite(h)) ? x - g / h : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4e-16 * (1.0 + std::abs(x)) || hi - lo <= 4e-16 * (1.0 + std::abs(x))) return next;
    x = next;
  }
  return x;
}

}  // namespace rpl
