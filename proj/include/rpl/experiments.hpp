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

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "rpl/domain.hpp"
#include "rpl/polarization.hpp"

namespace rpl {

enum class SweepMethod { exact_circle, optimizer };

struct SweepRow {
  long n = 0;
  double p = 0.0;
  int d = 0;
  double value = 0.0;
  double norm_pow = 0.0;    // value / n^{p/d}
  double norm_nlogn = 0.0;  // value / (n ln n); NaN at n = 1
  double norm_n = 0.0;      // value / n
  double lower = std::numeric_limits<double>::quiet_NaN();
  double upper = std::numeric_limits<double>::quiet_NaN();
  std::string lower_src;
  std::string upper_src;
  // Subset of: exact, best-found, conjectural-lower, asymptotic-lower,
  // sandwich-violation, exploratory.
  std::vector<std::string> flags;

  bool has_flag(const std::string& f) const;
};

struct SweepTable {
  Domain domain = Domain::circle();
  double p = 0.0;
  SweepMethod method = SweepMethod::exact_circle;
  std::vector<SweepRow> rows;
  // Set by conjecture_explore: the conjectured limit of the named column.
  double reference_limit = std::numeric_limits<double>::quiet_NaN();
  std::string reference_column;
};

/// One row per n. exact_circle uses the roots-of-unity value (the exact
/// max-min on the circle); optimizer runs maximize_polarization.
SweepTable sweep(const Domain& domain, double p, std::span<const long> n_values, SweepMethod method,
                 const MaxMinOptions& opts = {});

enum class Normalization { pow, nlogn, n };
std::string to_string(Normalization norm);
Normalization normalization_from_string(const std::string& name);

struct AsymptoteFit {
  double limit = 0.0;
  double slope = 0.0;
};

/// Least-squares line through (x, normalized value) with x = 1/ln n when
/// p equals the dimension and x = 1/n otherwise; the intercept is the limit.
AsymptoteFit asymptote_estimate(const SweepTable& table, Normalization norm);

struct Claim {
  std::string tag;
  bool pass = false;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<Claim> claims;
  bool passed() const;
};

std::vector<std::string> suite_names();
/// Runs a named batch of checks with fixed seeds. Unknown names throw
/// InvalidArgument; failed checks are report entries, never exceptions.
VerificationReport verify_suite(const std::string& name);

/// Exploratory sweep on the circle (exact values) or the segment (optimizer)
/// with the conjectured limit attached: sigma_{p,1} / H^p for p > 1 in
/// column norm_pow, and 2 / H in column norm_nlogn for p = 1.
SweepTable conjecture_explore(const Domain& domain, double p, std::span<const long> n_values,
                              const MaxMinOptions& opts = {});

}  // namespace rpl
