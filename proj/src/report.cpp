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

#include "rpl/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rpl/error.hpp"

namespace rpl::report {

namespace {

using json = nlohmann::ordered_json;

constexpr int kIndent = 2;

json points_json(const PointSet& pts) {
  json arr = json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    json row = json::array();
    for (double v : pts[i]) row.push_back(v);
    arr.push_back(std::move(row));
  }
  return arr;
}

json config_json(const Configuration& c) {
  return {{"domain", {{"kind", kind_name(c.domain().kind())}, {"d", c.domain().dim()}}},
          {"points", points_json(c.points())}};
}

json certificate_json(const PolarizationResult& r) {
  return {{"value", r.value},
          {"argmin", r.argmin},
          {"mesh_size", r.mesh_size},
          {"refinement_steps", r.refinement_steps},
          {"tolerance", r.tolerance}};
}

std::string method_name(SweepMethod m) { return m == SweepMethod::exact_circle ? "exact_circle" : "optimizer"; }

json row_json(const SweepRow& r) {
  return {{"n", r.n},
          {"p", r.p},
          {"d", r.d},
          {"value", r.value},
          {"norm_pow", r.norm_pow},
          {"norm_nlogn", r.norm_nlogn},
          {"norm_n", r.norm_n},
          {"lower", r.lower},
          {"upper", r.upper},
          {"lower_src", r.lower_src},
          {"upper_src", r.upper_src},
          {"flags", r.flags}};
}

json report_json(const VerificationReport& rep) {
  json claims = json::array();
  for (const Claim& c : rep.claims) {
    claims.push_back({{"tag", c.tag},
                      {"status", c.pass ? "pass" : "fail"},
                      {"observed", c.observed},
                      {"expected", c.expected},
                      {"tolerance", c.tolerance}});
  }
  return {{"suite", rep.suite}, {"passed", rep.passed()}, {"claims", claims}};
}

std::string dump(const json& j) { return j.dump(kIndent) + "\n"; }

std::string shortest(double v) {
  if (!std::isfinite(v)) return "";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Compact tick label; the chart is for reading trends, not values.
std::string tick_label(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

}  // namespace

std::string to_json(const Configuration& config) { return dump(config_json(config)); }

Configuration configuration_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("configuration JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("domain") || !j.contains("points")) {
    throw InvalidArgument("configuration JSON: expected an object with \"domain\" and \"points\"");
  }
  const json& dom = j["domain"];
  if (!dom.is_object() || !dom.contains("kind") || !dom["kind"].is_string()) {
    throw InvalidArgument("configuration JSON: domain.kind must be a string");
  }
  const std::string kind = dom["kind"].get<std::string>();
  int d = (kind == "circle" || kind == "segment") ? 1 : 0;
  if (dom.contains("d")) {
    if (!dom["d"].is_number_integer()) throw InvalidArgument("configuration JSON: domain.d must be an integer");
    d = dom["d"].get<int>();
  }
  const Domain domain = Domain::from_name(kind, d);
  const std::size_t dim = static_cast<std::size_t>(domain.ambient_dim());
  const json& pts = j["points"];
  if (!pts.is_array() || pts.empty()) throw InvalidArgument("configuration JSON: points must be a non-empty array");
  PointSet ps(static_cast<int>(dim));
  std::vector<double> x(dim);
  for (const json& row : pts) {
    if (!row.is_array() || row.size() != dim) {
      throw InvalidArgument("configuration JSON: every point needs " + std::to_string(dim) + " coordinates");
    }
    for (std::size_t k = 0; k < dim; ++k) {
      if (!row[k].is_number()) throw InvalidArgument("configuration JSON: coordinates must be numbers");
      x[k] = row[k].get<double>();
    }
    // Decimal input loses the last bits; accept points within rounding of the domain.
    if (!domain.contains(x, 1e-9)) throw InvalidArgument("configuration JSON: point outside " + domain.name());
    // Points already on the domain are kept bit for bit.
    if (!domain.contains(x)) domain.project(x);
    ps.push_back(x);
  }
  return Configuration(domain, std::move(ps));
}

std::string to_json(const PolarizationResult& result) { return dump(certificate_json(result)); }

std::string to_json(const MaxMinResult& result) {
  return dump({{"value", result.value},
               {"restarts", result.restarts},
               {"converged", result.converged},
               {"restart_values", result.restart_values},
               {"certificate", certificate_json(result.certificate)},
               {"configuration", config_json(result.config)}});
}

std::string to_json(const EnergyResult& result) {
  return dump({{"energy", result.energy},
               {"restarts", result.restarts},
               {"gradient_norm", result.gradient_norm},
               {"configuration", config_json(result.config)}});
}

std::string to_json(const SweepTable& table) {
  json rows = json::array();
  for (const SweepRow& r : table.rows) rows.push_back(row_json(r));
  json j = {{"domain", {{"kind", kind_name(table.domain.kind())}, {"d", table.domain.dim()}}},
            {"p", table.p},
            {"method", method_name(table.method)},
            {"rows", rows}};
  if (!table.reference_column.empty()) {
    j["reference"] = {{"column", table.reference_column}, {"limit", table.reference_limit}};
  }
  return dump(j);
}

std::string to_json(const VerificationReport& report) { return dump(report_json(report)); }

std::string to_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  bool all = true;
  for (const auto& r : reports) {
    arr.push_back(report_json(r));
    all = all && r.passed();
  }
  return dump({{"passed", all}, {"suites", arr}});
}

std::string to_json(const std::vector<BoundValue>& bounds) {
  json arr = json::array();
  for (const BoundValue& b : bounds) {
    arr.push_back({{"kind", to_string(b.kind)},
                   {"value", b.value},
                   {"source", b.source},
                   {"conjectural", b.conjectural},
                   {"asymptotic", b.asymptotic}});
  }
  return dump(arr);
}

std::string number(double value) { return json(value).dump() + "\n"; }

std::string to_csv(const SweepTable& table) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const SweepRow& r : table.rows) {
    std::string flags;
    for (const auto& f : r.flags) flags += (flags.empty() ? "" : ";") + f;
    out += std::to_string(r.n) + "," + shortest(r.p) + "," + std::to_string(r.d) + "," + shortest(r.value) + "," +
           shortest(r.norm_pow) + "," + shortest(r.norm_nlogn) + "," + shortest(r.norm_n) + "," + shortest(r.lower) +
           "," + shortest(r.upper) + "," + r.lower_src + "," + r.upper_src + "," + flags + "\n";
  }
  return out;
}

double column(const SweepRow& row, const std::string& name) {
  if (name == "n") return static_cast<double>(row.n);
  if (name == "p") return row.p;
  if (name == "d") return row.d;
  if (name == "value") return row.value;
  if (name == "norm_pow") return row.norm_pow;
  if (name == "norm_nlogn") return row.norm_nlogn;
  if (name == "norm_n") return row.norm_n;
  if (name == "lower") return row.lower;
  if (name == "upper") return row.upper;
  throw InvalidArgument("unknown numeric column '" + name + "'");
}

std::string to_svg(const SweepTable& table, const std::string& x, const std::vector<std::string>& ys) {
  if (ys.empty() || ys.size() > 2) throw InvalidArgument("to_svg: need one or two y columns");
  constexpr double W = 640, H = 400, L = 70, R = 20, T = 20, B = 50;
  static const char* kColors[] = {"#1f77b4", "#d62728"};

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const SweepRow& r : table.rows) {
    const double xv = column(r, x);
    if (!std::isfinite(xv)) continue;
    for (const auto& y : ys) {
      const double yv = column(r, y);
      if (!std::isfinite(yv)) continue;
      xmin = std::min(xmin, xv);
      xmax = std::max(xmax, xv);
      ymin = std::min(ymin, yv);
      ymax = std::max(ymax, yv);
    }
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  const bool logx = xmin > 0.0 && xmax / xmin > 100.0;
  auto fx = [&](double v) { return logx ? std::log10(v) : v; };
  double x0 = fx(xmin), x1 = fx(xmax);
  if (x1 == x0) x0 -= 0.5, x1 += 0.5;
  if (ymax == ymin) ymin -= 0.5, ymax += 0.5;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;
  auto px = [&](double v) { return L + (fx(v) - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double v) { return H - B - (v - ymin) / (ymax - ymin) * (H - T - B); };

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << " " << H << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double f = i / 4.0;
    const double xv = logx ? std::pow(10.0, x0 + f * (x1 - x0)) : x0 + f * (x1 - x0);
    const double yv = ymin + f * (ymax - ymin);
    os << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 15 << "\" text-anchor=\"middle\">" << tick_label(xv)
       << "</text>\n";
    os << "<text x=\"" << L - 5 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << tick_label(yv)
       << "</text>\n";
  }
  os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">" << xml_escape(x)
     << (logx ? " (log scale)" : "") << "</text>\n";
  for (std::size_t s = 0; s < ys.size(); ++s) {
    os << "<polyline fill=\"none\" stroke=\"" << kColors[s] << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const SweepRow& r : table.rows) {
      const double xv = column(r, x), yv = column(r, ys[s]);
      if (!std::isfinite(xv) || !std::isfinite(yv)) continue;
      os << (first ? "" : " ") << px(xv) << "," << py(yv);
      first = false;
    }
    os << "\"/>\n";
    const double ly = T + 10 + 16.0 * static_cast<double>(s);
    os << "<line x1=\"" << W - R - 150 << "\" y1=\"" << ly << "\" x2=\"" << W - R - 130 << "\" y2=\"" << ly
       << "\" stroke=\"" << kColors[s] << "\" stroke-width=\"1.5\"/>\n";
    os << "<text x=\"" << W - R - 125 << "\" y=\"" << ly + 4 << "\">" << xml_escape(ys[s]) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rpl::report
