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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "oracles.hpp"
#include "rpl/cli.hpp"
#include "rpl/constants.hpp"
#include "rpl/domain.hpp"
#include "rpl/polarization.hpp"
#include "rpl/report.hpp"

namespace rpl::cli {
namespace {

RunSpec parse(std::vector<std::string> args) { return parse_args(args); }

// Expects a usage error whose message contains `needle`.
void expect_usage(std::vector<std::string> args, const std::string& needle) {
  try {
    parse_args(args);
    ADD_FAILURE() << "no usage error for " << args.front();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

struct Ran {
  int code;
  std::string out, err;
};

Ran run_args(std::vector<std::string> args) {
  std::vector<std::string> storage = {"rpl"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  std::ostringstream out, err;
  const int code = main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rpl_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(ParseArgs, PolarizeExact) {
  const RunSpec s = parse({"polarize", "--domain", "circle", "--n", "5", "--p", "2", "--exact"});
  EXPECT_EQ(s.command, Command::polarize);
  EXPECT_EQ(s.domain, "circle");
  EXPECT_EQ(*s.p, 2.0);
  EXPECT_EQ(s.n->lo, 5);
  EXPECT_EQ(s.n->scale, NSpec::Scale::single);
  EXPECT_TRUE(s.exact);
  EXPECT_EQ(s.resolved_dim(), 1);
}

TEST(ParseArgs, LogRange) {
  const RunSpec s = parse({"sweep", "--domain", "circle", "--p", "1", "--n", "1000:1000000:log", "--format", "csv"});
  EXPECT_EQ(s.format, OutputFormat::csv);
  EXPECT_EQ(s.n->scale, NSpec::Scale::log);
  const auto v = s.n->values();
  EXPECT_EQ(v.front(), 1000);
  EXPECT_EQ(v.back(), 1000000);
  EXPECT_EQ(v.size(), 13u);
  for (std::size_t i = 1; i < v.size(); ++i) EXPECT_GT(v[i], v[i - 1]);
}

TEST(ParseArgs, RangeForms) {
  EXPECT_EQ(NSpec::parse("3:7").values(), (std::vector<long>{3, 4, 5, 6, 7}));
  EXPECT_EQ(NSpec::parse("10:20:lin:3").values(), (std::vector<long>{10, 15, 20}));
  EXPECT_EQ(NSpec::parse("1:100:log:3").values(), (std::vector<long>{1, 10, 100}));
  // Rounding collisions collapse.
  EXPECT_EQ(NSpec::parse("1:3:log:10").values(), (std::vector<long>{1, 2, 3}));
}

TEST(ParseArgs, Errors) {
  expect_usage({"polarize", "--p", "-1", "--n", "3"}, "p must be positive");
  expect_usage({"polarize", "--p", "-1"}, "p must be positive");
  expect_usage({"polarize", "--p", "2", "--n", "3", "--bogus", "1"}, "--bogus");
  expect_usage({"polarize", "--n", "3"}, "--p is required");
  expect_usage({"sweep", "--p", "2", "--n", "5:3"}, "malformed range '5:3'");
  expect_usage({"sweep", "--p", "2", "--n", "1:9:cubic"}, "malformed range");
  expect_usage({"sweep", "--p", "2", "--n", "x"}, "--n");
  expect_usage({"sweep", "--p", "two", "--n", "4"}, "--p");
  expect_usage({"sweep", "--p", "2", "--n", "4", "--domain", "torus"}, "--domain");
  expect_usage({"sweep", "--p", "2", "--n", "4", "--domain", "sphere", "--method", "exact"}, "--method");
  expect_usage({"oracle"}, "--what is required");
  expect_usage({"oracle", "--what", "bound", "--p", "2", "--n", "5"}, "--kind");
  expect_usage({"net"}, "--delta is required");
  expect_usage({"verify", "--suite", "nope"}, "--suite");
  expect_usage({"foo"}, "unknown command 'foo'");
  expect_usage({"polarize", "--p", "2", "--n", "3", "--domain", "sphere", "--exact"}, "--exact");
  expect_usage({"polarize", "--p", "2", "--n", "3:9"}, "single n");
  EXPECT_THROW(parse({"polarize", "--help"}), HelpRequested);
}

// Random valid specs for the print/parse round trip.
RunSpec random_spec(oracle::Gen& g) {
  static const std::vector<std::string> domains = {"circle", "sphere", "ball", "segment"};
  static const std::vector<std::string> whats = {"wiener", "tau", "zeta", "cap", "bound", "equally-spaced"};
  static const std::vector<std::string> suites = {"circle_closed_forms", "recurrences", "ball_bounds"};
  RunSpec s;
  s.command = static_cast<Command>(g.integer(0, 6));
  auto maybe = [&] { return g.uniform(0, 1) < 0.5; };
  auto real = [&] { return std::ldexp(g.uniform(0.1, 1.0), static_cast<int>(g.integer(-8, 8))); };
  auto nspec = [&](bool single) {
    NSpec n;
    n.lo = n.hi = g.integer(1, 1000);
    if (single || maybe()) return n;
    n.hi = n.lo + g.integer(1, 100000);
    n.scale = maybe() ? NSpec::Scale::log : NSpec::Scale::lin;
    if (maybe()) n.count = g.integer(2, 50);
    return n;
  };
  if (s.command != Command::verify) {
    s.domain = domains[static_cast<std::size_t>(g.integer(0, 3))];
    if (maybe() && (s.domain == "sphere" || s.domain == "ball")) s.d = static_cast<int>(g.integer(1, 3));
  }
  switch (s.command) {
    case Command::polarize:
    case Command::energy:
      s.p = real();
      s.n = nspec(true);
      if (maybe()) s.seed = static_cast<std::uint64_t>(g.integer(0, 1 << 30));
      if (maybe()) s.restarts = static_cast<int>(g.integer(1, 64));
      if (s.command == Command::polarize && maybe()) s.tol = g.uniform(1e-12, 0.5);
      if (s.command == Command::polarize && s.domain == "circle") s.exact = maybe();
      break;
    case Command::sweep:
    case Command::explore:
      s.p = real();
      s.n = nspec(false);
      if (s.command == Command::sweep && maybe()) s.method = s.domain == "circle" && maybe() ? "exact" : "optimizer";
      s.format = static_cast<OutputFormat>(g.integer(0, 2));
      if (s.format == OutputFormat::svg && maybe()) {
        s.x_col = "n";
        s.y_cols = maybe() ? std::vector<std::string>{"value"} : std::vector<std::string>{"norm_pow", "upper"};
      }
      break;
    case Command::oracle:
      s.what = whats[static_cast<std::size_t>(g.integer(0, 5))];
      if (s.what == "bound") s.kind = maybe() ? "lower" : "upper";
      if (maybe()) s.p = real();
      if (maybe()) s.n = nspec(true);
      if (maybe()) s.x = -real();
      if (maybe()) s.r = real();
      break;
    case Command::verify:
      if (maybe()) s.suite = suites[static_cast<std::size_t>(g.integer(0, 2))];
      break;
    case Command::net:
      s.delta = real();
      if (maybe()) s.seed = static_cast<std::uint64_t>(g.integer(0, 1000));
      break;
  }
  if (maybe()) s.out = "out_" + std::to_string(g.integer(0, 99)) + ".txt";
  return s;
}

TEST(ParseArgs, PrintParseRoundTrip) {
  oracle::Gen g(51);
  for (int i = 0; i < 2000; ++i) {
    const RunSpec s = random_spec(g);
    const auto args = print_args(s);
    RunSpec back;
    ASSERT_NO_THROW(back = parse_args(args)) << ::testing::PrintToString(args);
    EXPECT_EQ(back, s) << ::testing::PrintToString(args);
    EXPECT_EQ(print_args(back), args);
  }
}

TEST(Run, OracleWienerPrintsOne) {
  const Ran r = run_args({"oracle", "--what", "wiener", "--domain", "sphere", "--d", "2", "--p", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1.0\n");
}

TEST(Run, VerifySuiteExitsZero) {
  const Ran r = run_args({"verify", "--suite", "circle_closed_forms"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["passed"].get<bool>());
}

TEST(Run, NetOnTheDiskHasAtMostSixteenPoints) {
  const Ran r = run_args({"net", "--domain", "ball", "--d", "2", "--delta", "1.0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Configuration c = report::configuration_from_json(r.out);
  EXPECT_LE(c.size(), 16u);
  EXPECT_GE(c.size(), 1u);
}

TEST(Run, UsageErrorsExitThree) {
  const Ran r = run_args({"polarize", "--p", "-1"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("p must be positive"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run_args({"--help"}).code, kExitOk);
}

TEST(Run, ExactPolarizationValue) {
  const Ran r = run_args({"polarize", "--n", "6", "--p", "4", "--exact"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NEAR(nlohmann::json::parse(r.out)["value"].get<double>(), 1296.0 / 48 + 36.0 / 24, 1e-12);
}

TEST(Run, InputConfigurationAndNonconvergence) {
  const auto path = temp_file("config.json");
  {
    std::ofstream f(path);
    f << report::to_json(circle_configuration(std::vector<double>{0.1, 1.3, 2.9, 4.4}));
  }
  const Ran ok = run_args({"polarize", "--p", "2", "--input", path.string()});
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  const std::vector<double> a = {0.1, 1.3, 2.9, 4.4};
  EXPECT_NEAR(nlohmann::json::parse(ok.out)["value"].get<double>(), inner_min(circle_configuration(a), 2.0, 1e-12).value,
              1e-8);
  const Ran energy = run_args({"energy", "--p", "2", "--input", path.string()});
  ASSERT_EQ(energy.code, kExitOk) << energy.err;
  EXPECT_NEAR(nlohmann::json::parse(energy.out)["energy"].get<double>(), oracle::pair_energy(circle_configuration(a).points().coords(), 2, 2.0),
              1e-10);
  // No gap below rounding is claimed.
  const Ran tiny = run_args({"polarize", "--p", "2", "--input", path.string(), "--tol", "1e-300"});
  ASSERT_EQ(tiny.code, kExitOk);
  EXPECT_GT(nlohmann::json::parse(tiny.out)["tolerance"].get<double>(), 1e-16);
  std::filesystem::remove(path);
  EXPECT_EQ(run_args({"polarize", "--p", "2", "--input", path.string()}).code, kExitError);
}

TEST(Run, IdenticalInvocationsAreByteIdentical) {
  const auto a = temp_file("a.json"), b = temp_file("b.json");
  for (const auto& path : {a, b}) {
    const Ran r = run_args({"polarize", "--domain", "sphere", "--n", "4", "--p", "2", "--seed", "7", "--restarts", "3",
                            "--out", path.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  const Ran s1 = run_args({"sweep", "--p", "3", "--n", "2:40", "--format", "csv"});
  const Ran s2 = run_args({"sweep", "--p", "3", "--n", "2:40", "--format", "csv"});
  EXPECT_EQ(s1.out, s2.out);
}

TEST(Run, DisagreeingRestartsExitTwo) {
  // Two restarts on S^2 with five points land on different local optima.
  const Ran r = run_args({"polarize", "--domain", "sphere", "--n", "5", "--p", "2", "--seed", "7", "--restarts", "2"});
  EXPECT_EQ(r.code, kExitNonconvergence);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["converged"].get<bool>());
}

TEST(Run, JsonNumbersCarryFullPrecision) {
  const Ran r = run_args({"oracle", "--what", "tau", "--d", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(std::stod(r.out), tau(1));
  const Ran s = run_args({"sweep", "--p", "1.5", "--n", "7", "--format", "json"});
  const auto j = nlohmann::json::parse(s.out);
  EXPECT_EQ(j["rows"][0]["value"].get<double>(), equally_spaced_value(7, 1.5));
}

TEST(Run, SvgOutput) {
  const Ran r = run_args({"sweep", "--p", "1", "--n", "10:100000:log", "--format", "svg", "--y-col", "norm_nlogn"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
}

}  // namespace
}  // namespace rpl::cli
