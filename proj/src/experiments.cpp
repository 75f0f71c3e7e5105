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

#include "rpl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "rpl/constants.hpp"
#include "rpl/energy.hpp"
#include "rpl/error.hpp"
#include "rpl/potentials.hpp"

namespace rpl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Exact rows compare against bounds with this much rounding allowance.
constexpr double kExactSlack = 1e-12;

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

void fill_normalizations(SweepRow& row) {
  const double n = static_cast<double>(row.n);
  row.norm_pow = row.value / std::pow(n, row.p / row.d);
  row.norm_nlogn = row.n > 1 ? row.value / (n * std::log(n)) : kNaN;
  row.norm_n = row.value / n;
}

// Largest lower bound, preferring non-conjectural ones; the single upper.
void fill_bounds(SweepRow& row, const Domain& domain, double slack) {
  const std::vector<BoundValue> bounds = all_bounds(domain, row.p, row.n);
  const BoundValue* lo = nullptr;
  const BoundValue* up = nullptr;
  for (const BoundValue& b : bounds) {
    if (b.kind == BoundKind::upper) {
      if (!up || b.value < up->value) up = &b;
      continue;
    }
    if (!lo || (lo->conjectural && !b.conjectural) ||
        (lo->conjectural == b.conjectural && b.value > lo->value)) {
      lo = &b;
    }
  }
  if (lo) {
    row.lower = lo->value;
    row.lower_src = lo->source;
    if (lo->conjectural) row.flags.push_back("conjectural-lower");
    if (lo->asymptotic) row.flags.push_back("asymptotic-lower");
  }
  if (up) {
    row.upper = up->value;
    row.upper_src = up->source;
  }
  const bool low_bad = lo && !lo->conjectural && row.value < lo->value * (1.0 - slack);
  const bool up_bad = up && row.value > up->value * (1.0 + slack);
  if (low_bad || up_bad) row.flags.push_back("sandwich-violation");
}

void check_positive(std::span<const long> n_values) {
  for (long n : n_values) {
    if (n < 1) throw InvalidArgument("sweep: n values must be positive");
  }
}

}  // namespace

bool SweepRow::has_flag(const std::string& f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }

SweepTable sweep(const Domain& domain, double p, std::span<const long> n_values, SweepMethod method,
                 const MaxMinOptions& opts) {
  if (!(p > 0.0)) throw InvalidArgument("sweep: p must be positive");
  if (method == SweepMethod::exact_circle && domain.kind() != DomainKind::circle) {
    throw InvalidArgument("sweep: exact_circle requires the circle domain, got " + domain.name());
  }
  check_positive(n_values);
  SweepTable table;
  table.domain = domain;
  table.p = p;
  table.method = method;
  table.rows.resize(n_values.size());

  if (method == SweepMethod::exact_circle) {
    // Rows are independent; each sum is itself a deterministic reduction.
    const long count = static_cast<long>(n_values.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      SweepRow& row = table.rows[static_cast<std::size_t>(i)];
      row.n = n_values[static_cast<std::size_t>(i)];
      row.p = p;
      row.d = 1;
      row.value = equally_spaced_value(static_cast<std::size_t>(row.n), p);
    }
    for (SweepRow& row : table.rows) {
      row.flags.push_back("exact");
      fill_normalizations(row);
      fill_bounds(row, domain, kExactSlack);
    }
    return table;
  }

  // The optimizer already parallelizes restarts, so rows run in order.
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    SweepRow& row = table.rows[i];
    row.n = n_values[i];
    row.p = p;
    row.d = domain.dim();
    const MaxMinResult res = maximize_polarization(domain, static_cast<std::size_t>(row.n), p, opts);
    row.value = res.value;
    row.flags.push_back("best-found");
    if (!res.converged) row.flags.push_back("unconverged");
    fill_normalizations(row);
    const double slack = res.certificate.tolerance > 0.0 ? res.certificate.tolerance / res.value : 1e-6;
    fill_bounds(row, domain, slack);
  }
  return table;
}

std::string to_string(Normalization norm) {
  switch (norm) {
    case Normalization::pow: return "norm_pow";
    case Normalization::nlogn: return "norm_nlogn";
    case Normalization::n: return "norm_n";
  }
  return "norm_pow";
}

Normalization normalization_from_string(const std::string& name) {
  if (name == "pow" || name == "norm_pow") return Normalization::pow;
  if (name == "nlogn" || name == "norm_nlogn") return Normalization::nlogn;
  if (name == "n" || name == "norm_n") return Normalization::n;
  throw InvalidArgument("unknown normalization '" + name + "'");
}

AsymptoteFit asymptote_estimate(const SweepTable& table, Normalization norm) {
  const auto& rows = table.rows;
  if (rows.size() < 3) throw InvalidArgument("asymptote_estimate: need at least 3 rows");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].n <= rows[i - 1].n) throw InvalidArgument("asymptote_estimate: n must be strictly increasing");
  }
  const bool critical = table.p == static_cast<double>(table.domain.dim());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  double m = 0.0;
  for (const SweepRow& r : rows) {
    const double n = static_cast<double>(r.n);
    if (critical && r.n < 2) continue;  // 1/ln 1 is undefined
    const double x = critical ? 1.0 / std::log(n) : 1.0 / n;
    const double y = norm == Normalization::pow ? r.norm_pow : norm == Normalization::nlogn ? r.norm_nlogn : r.norm_n;
    if (!std::isfinite(y)) continue;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    m += 1.0;
  }
  if (m < 3.0) throw InvalidArgument("asymptote_estimate: need at least 3 usable rows");
  const double det = m * sxx - sx * sx;
  AsymptoteFit fit;
  fit.slope = det != 0.0 ? (m * sxy - sx * sy) / det : 0.0;
  fit.limit = (sy - fit.slope * sx) / m;
  return fit;
}

bool VerificationReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

namespace {

// Worst value is reported as `observed`; pass means observed <= tolerance.
Claim at_most(std::string tag, double observed, double tolerance, double expected = 0.0) {
  return {std::move(tag), observed <= tolerance, observed, expected, tolerance};
}

Claim close_rel(std::string tag, double observed, double expected, double tolerance) {
  return {std::move(tag), rel_err(observed, expected) <= tolerance, observed, expected, tolerance};
}

std::vector<double> random_angles(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  std::vector<double> a(n);
  for (double& t : a) t = u(rng);
  return a;
}

std::vector<std::size_t> closed_form_sizes() {
  std::vector<std::size_t> ns;
  for (std::size_t n = 1; n <= 64; ++n) ns.push_back(n);
  ns.push_back(1000);
  ns.push_back(10000);
  return ns;
}

VerificationReport circle_closed_forms() {
  VerificationReport rep;
  double e2 = 0.0, e4 = 0.0, mid = 0.0;
  for (std::size_t n : closed_form_sizes()) {
    const double nd = static_cast<double>(n);
    e2 = std::max(e2, rel_err(equally_spaced_value(n, 2.0), nd * nd / 4.0));
    e4 = std::max(e4, rel_err(equally_spaced_value(n, 4.0), std::pow(nd, 4) / 48.0 + nd * nd / 24.0));
    if (n <= 64) {
      // The minimum of the equally spaced potential sits at the gap midpoints.
      const auto roots = equally_spaced_angles(n);
      mid = std::max(mid, rel_err(circle_A(roots, 3.0, kPi / nd), equally_spaced_value(n, 3.0)));
    }
  }
  rep.claims.push_back(at_most("equally spaced value at p=2 equals n^2/4 (max rel err)", e2, 1e-12));
  rep.claims.push_back(at_most("equally spaced value at p=4 equals n^4/48 + n^2/24 (max rel err)", e4, 1e-12));
  rep.claims.push_back(at_most("equally spaced minimum sits at gap midpoints, p=3", mid, 1e-12));
  double cf = 0.0;
  for (long n = 1; n <= 64; ++n) {
    cf = std::max(cf, rel_err(chebyshev_closed_form(n, 2), equally_spaced_value(static_cast<std::size_t>(n), 2.0)));
    cf = std::max(cf, rel_err(chebyshev_closed_form(n, 4), equally_spaced_value(static_cast<std::size_t>(n), 4.0)));
  }
  rep.claims.push_back(at_most("closed-form registry agrees with direct sums", cf, 1e-12));
  return rep;
}

VerificationReport sphere_bounds() {
  VerificationReport rep;
  rep.claims.push_back(close_rel("sphere d=2 p=1 Wiener constant is 1", wiener_constant(Domain::sphere(2), 1.0), 1.0, 1e-14));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ur(0.0, 2.0);
  double worst = -1e300;
  for (int d : {2, 3}) {
    for (int i = 0; i < 50; ++i) {
      const double r = ur(rng);
      worst = std::max(worst, cap_measure(d, r) - tau(d) * std::pow(r, d));
    }
  }
  rep.claims.push_back(at_most("spherical cap measure at most tau_d r^d (max excess)", worst, 1e-14));

  const Domain s2 = Domain::sphere(2);
  MaxMinOptions mo;
  mo.restarts = 8;
  EnergyOptions eo;
  eo.restarts = 4;
  for (double p : {2.0, 3.0}) {
    for (std::size_t n : {4, 6, 12}) {
      const double value = maximize_polarization(s2, n, p, mo).value;
      const double upper = polarization_bound(s2, p, static_cast<long>(n), BoundKind::upper).value;
      const double lower = polarization_lower_bound_from_energy(s2, n, p, eo).value;
      const std::string at = " (n=" + std::to_string(n) + ", p=" + std::to_string(static_cast<int>(p)) + ")";
      rep.claims.push_back({"S^2 best-found value below covering upper bound" + at, value <= upper, value, upper, 0.0});
      rep.claims.push_back({"S^2 best-found value above energy lower bound" + at, value >= lower, value, lower, 0.0});
    }
  }
  return rep;
}

VerificationReport ball_bounds() {
  VerificationReport rep;
  rep.claims.push_back(close_rel("ball d=3 p=1 Wiener constant is 1", wiener_constant(Domain::ball(3), 1.0), 1.0, 1e-14));
  const Domain b3 = Domain::ball(3);
  MaxMinOptions mo;
  mo.restarts = 4;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const double v = maximize_polarization(b3, n, 1.0, mo).value;
    worst = std::max(worst, std::abs(v - static_cast<double>(n)));
  }
  rep.claims.push_back(at_most("ball d=3 p=1 max-min polarization equals n, n<=8 (max abs err)", worst, 1e-3));
  double excess = -1e300;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Configuration c = sample_uniform(b3, n, 100 * n + s);
      const PolarizationResult r = inner_min(c, 1.0, 1e-10 * static_cast<double>(n));
      excess = std::max(excess, r.value - r.tolerance - static_cast<double>(n));
    }
  }
  rep.claims.push_back(at_most("ball d=3 p=1 polarization of random configurations at most n", excess, 1e-9));

  const double delta = 1.0;  // 4 / sqrt(16)
  const Configuration net = maximal_delta_net(Domain::ball(2), delta, 1);
  rep.claims.push_back(at_most("delta-net on the disk with delta = 4/sqrt(16) has at most 16 points",
                               static_cast<double>(net.size()), 16.0, 16.0));
  const PolarizationResult r = inner_min(net, 4.0, 1e-8);
  rep.claims.push_back({"delta-net potential minimum at least delta^-p, p=4", r.value - r.tolerance >= 1.0,
                        r.value, 1.0, r.tolerance});
  return rep;
}

VerificationReport discrete_circle() {
  VerificationReport rep;
  std::mt19937_64 rng(11);
  double worst = -1e300, attain = 0.0;
  for (double p : {1.0, 2.0, 4.0}) {
    for (std::size_t n = 2; n <= 8; ++n) {
      const double opt = discrete_optimum(n, p);
      attain = std::max(attain, rel_err(discrete_polarization(discrete_optimal_angles(n), n, p), opt));
      for (int i = 0; i < 1000; ++i) {
        worst = std::max(worst, discrete_polarization(random_angles(rng, n), n, p) - opt);
      }
    }
  }
  rep.claims.push_back(at_most("discrete polarization of random configs at most the shifted optimum", worst, 1e-12));
  rep.claims.push_back(at_most("shifted roots of unity attain the discrete optimum", attain, 1e-12));
  double over = -1e300;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 12);
    const auto a = random_angles(rng, n);
    const double nd = static_cast<double>(n);
    over = std::max(over, polarization_at_product_max(a, 4.0) - (std::pow(nd, 4) / 48.0 + nd * nd / 24.0));
    over = std::max(over, polarization_at_product_max(a, 2.0) - nd * nd / 4.0);
  }
  rep.claims.push_back(at_most("potential at the product maximum at most the equally spaced value, p=2,4", over, 1e-10));
  return rep;
}

VerificationReport recurrences() {
  VerificationReport rep;
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
  double rec = 0.0, m2 = 0.0, m4 = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 10);
    const auto a = random_angles(rng, n);
    double t = ut(rng);
    // Keep t away from the nodes where both sides blow up.
    for (double aj : a) {
      if (std::abs(std::remainder(t - aj, 2.0 * kPi)) < 1e-2) t += 2e-2;
    }
    for (double p : {1.0, 2.0, 3.5}) rec = std::max(rec, circle_A_recurrence_check(a, p, t));
    const double a2 = circle_A(a, 2.0, t), a4 = circle_A(a, 4.0, t);
    m2 = std::max(m2, rel_err(log_derivative_functional(a, 2, t), a2));
    m4 = std::max(m4, rel_err(log_derivative_functional(a, 4, t), 6.0 * a4 - a2));
  }
  rep.claims.push_back(at_most("A_{p+2} recurrence residual (max rel)", rec, 1e-9));
  rep.claims.push_back(at_most("log-derivative functional m=2 equals A_2 (max rel)", m2, 1e-9));
  rep.claims.push_back(at_most("log-derivative functional m=4 equals 6 A_4 - A_2 (max rel)", m4, 1e-9));
  return rep;
}

VerificationReport energy_bounds() {
  VerificationReport rep;
  double worst = 0.0;
  for (std::size_t n = 2; n <= 100; ++n) {
    const double nd = static_cast<double>(n);
    const double e = energy(circle_configuration(equally_spaced_angles(n)), 2.0);
    worst = std::max(worst, rel_err(e, nd * (nd * nd - 1.0) / 12.0));
  }
  rep.claims.push_back(at_most("roots-of-unity energy at p=2 equals n(n^2-1)/12 (max rel)", worst, 1e-10));
  const double big = energy(circle_configuration(equally_spaced_angles(10000)), 2.0) / 1e12;
  rep.claims.push_back(close_rel("circle energy E/n^3 at n=1e4 near 2 zeta(2)/(2 pi)^2", big,
                                 2.0 * riemann_zeta(2.0) / (4.0 * kPi * kPi), 1e-2));
  double gap = -1e300;
  for (std::size_t n = 2; n <= 50; ++n) {
    gap = std::max(gap, polarization_lower_bound_from_energy(Domain::circle(), n, 2.0).value - equally_spaced_value(n, 2.0));
  }
  rep.claims.push_back(at_most("energy lower bound at most the circle p=2 optimum", gap, 0.0));
  std::vector<double> es;
  for (std::size_t n = 2; n <= 50; ++n) es.push_back(roots_of_unity_energy_p2(n));
  const auto res = superadditivity_check(es, 2);
  rep.claims.push_back({"superadditivity residuals nonnegative, circle p=2",
                        *std::min_element(res.begin(), res.end()) >= -1e-6, *std::min_element(res.begin(), res.end()),
                        0.0, 1e-6});
  return rep;
}

VerificationReport conjecture1_d1() {
  VerificationReport rep;
  for (double p : {2.0, 3.0, 4.0}) {
    const double ratio = equally_spaced_value(100000, p) / std::pow(1e5, p);
    const double sigma = conjectured_sigma_p1(p) / std::pow(2.0 * kPi, p);
    rep.claims.push_back(close_rel("circle M_n/n^p at n=1e5 near sigma_{p,1}/(2 pi)^p, p=" + std::to_string(static_cast<int>(p)),
                                   ratio, sigma, 5e-3));
  }
  return rep;
}

const std::map<std::string, std::function<VerificationReport()>>& suites() {
  static const std::map<std::string, std::function<VerificationReport()>> table = {
      {"circle_closed_forms", circle_closed_forms}, {"sphere_bounds", sphere_bounds},
      {"ball_bounds", ball_bounds},                 {"discrete_circle", discrete_circle},
      {"recurrences", recurrences},                 {"energy_bounds", energy_bounds},
      {"conjecture1_d1", conjecture1_d1},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"circle_closed_forms", "sphere_bounds", "ball_bounds", "discrete_circle",
          "recurrences",         "energy_bounds", "conjecture1_d1"};
}

VerificationReport verify_suite(const std::string& name) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw InvalidArgument("verify_suite: unknown suite '" + name + "'");
  VerificationReport rep = it->second();
  rep.suite = name;
  return rep;
}

SweepTable conjecture_explore(const Domain& domain, double p, std::span<const long> n_values, const MaxMinOptions& opts) {
  if (domain.kind() != DomainKind::circle && domain.kind() != DomainKind::segment) {
    throw InvalidArgument("conjecture_explore: unsupported domain " + domain.name());
  }
  if (p < 1.0) throw InvalidArgument("conjecture_explore: needs p >= 1 (p > d or p = d)");
  const bool circle = domain.kind() == DomainKind::circle;
  SweepTable table = sweep(domain, p, n_values, circle ? SweepMethod::exact_circle : SweepMethod::optimizer, opts);
  const double H = domain.hausdorff_measure();
  if (p > 1.0) {
    table.reference_limit = conjectured_sigma_p1(p) / std::pow(H, p);
    table.reference_column = "norm_pow";
  } else {
    table.reference_limit = unit_ball_volume(1) / H;
    table.reference_column = "norm_nlogn";
  }
  for (SweepRow& row : table.rows) row.flags.push_back("exploratory");
  return table;
}

}  // namespace rpl
