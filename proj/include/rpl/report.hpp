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

#include <string>
#include <vector>

#include "rpl/constants.hpp"
#include "rpl/domain.hpp"
#include "rpl/energy.hpp"
#include "rpl/experiments.hpp"
#include "rpl/polarization.hpp"

// Serialization of library results. JSON numbers use shortest round-trip
// formatting (exact for every double); non-finite values become null.
namespace rpl::report {

std::string to_json(const Configuration& config);
// Throws InvalidArgument on malformed input or points outside the domain.
Configuration configuration_from_json(const std::string& text);

std::string to_json(const PolarizationResult& result);
std::string to_json(const MaxMinResult& result);
std::string to_json(const EnergyResult& result);
std::string to_json(const SweepTable& table);
std::string to_json(const VerificationReport& report);
std::string to_json(const std::vector<VerificationReport>& reports);
std::string to_json(const std::vector<BoundValue>& bounds);
// A bare JSON number, e.g. "1.0".
std::string number(double value);

inline const char* kCsvHeader = "n,p,d,value,norm_pow,norm_nlogn,norm_n,lower,upper,lower_src,upper_src,flags";
std::string to_csv(const SweepTable& table);

/// Line chart of up to two columns of `table` against column `x`. Uses a
/// log x-axis when the x range spans more than two decades.
std::string to_svg(const SweepTable& table, const std::string& x, const std::vector<std::string>& ys);

// Value of a numeric sweep column by CSV header name.
double column(const SweepRow& row, const std::string& name);

}  // namespace rpl::report
