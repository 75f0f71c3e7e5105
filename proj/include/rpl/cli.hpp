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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <vector>

namespace rpl::cli {

enum class Command { polarize, energy, oracle, sweep, verify, explore, net };
enum class OutputFormat { json, csv, svg };

std::string to_string(Command c);
std::string to_string(OutputFormat f);

// `--n` accepts a single value or `lo:hi[:lin|log[:count]]`. A bare `lo:hi`
// is every integer in [lo, hi]; `log` without a count takes four points per
// decade.
struct NSpec {
  enum class Scale { single, lin, log };
  long lo = 1;
  long hi = 1;
  Scale scale = Scale::single;
  long count = 0;  // 0: scale default

  static NSpec parse(const std::string& text);
  std::string print() const;
  // Strictly increasing, duplicates from rounding removed.
  std::vector<long> values() const;

  friend bool operator==(const NSpec&, const NSpec&) = default;
};

struct RunSpec {
  Command command = Command::polarize;
  std::string domain = "circle";
  int d = 0;  // 0: 1 for circle/segment, 2 for sphere/ball
  std::optional<double> p;
  std::optional<NSpec> n;
  std::uint64_t seed = 1;
  std::optional<double> tol;  // relative certificate gap
  std::optional<int> restarts;
  OutputFormat format = OutputFormat::json;
  std::string out;  // empty: standard output

  bool exact = false;                 // polarize on the circle
  std::string input;                  // polarize, energy: configuration file
  std::string method;                 // sweep: exact|optimizer; empty picks
  std::string suite;                  // verify: a suite name or empty for all
  std::string what;                   // oracle quantity
  std::string kind;                   // oracle bound: lower|upper
  std::optional<double> x;            // oracle gamma/zeta argument
  std::optional<double> r;            // oracle cap/annulus radius
  std::optional<double> delta;        // net separation
  std::string x_col;                  // svg axes
  std::vector<std::string> y_cols;

  int resolved_dim() const;

  friend bool operator==(const RunSpec&, const RunSpec&) = default;
};

// Thrown for every command-line problem; the message names the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries the help text when --help is given.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// `args` excludes the program name.
RunSpec parse_args(std::span<const std::string> args);
// Canonical arguments with parse_args(print_args(s)) == s.
std::vector<std::string> print_args(const RunSpec& spec);

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitNonconvergence = 2;
inline constexpr int kExitError = 3;

int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

// parse_args + run with usage errors mapped to kExitError. Honors
// RPL_THREADS.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rpl::cli
