// Copyright 2026 The dpdens Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpdens/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dpdens {
namespace io {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

}  // namespace

std::vector<double> read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<double> data;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": not a number: '" + t + "'");
    }
    if (used != t.size())
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": trailing characters: '" + t + "'");
    if (v < 0.0 || v > 1.0 || !std::isfinite(v))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": value outside [0, 1]: " + t);
    data.push_back(v);
  }
  return data;
}

void write_dataset(const std::string& path, const std::vector<double>& data) {
  std::ofstream out = open_out(path);
  out.precision(17);
  for (double v : data) out << v << "\n";
}

std::map<std::string, std::string> read_config(
    const std::string& path, const std::vector<std::string>& allowed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  std::map<std::string, std::string> cfg;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": empty key or value");
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
    if (cfg.count(key))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": duplicate key '" + key + "'");
    cfg[key] = value;
  }
  return cfg;
}

bool config_has(const std::map<std::string, std::string>& cfg,
                const std::string& key) {
  return cfg.count(key) != 0;
}

std::string config_string(const std::map<std::string, std::string>& cfg,
                          const std::string& key) {
  const auto it = cfg.find(key);
  if (it == cfg.end())
    throw std::runtime_error("missing config key '" + key + "'");
  return it->second;
}

double config_double(const std::map<std::string, std::string>& cfg,
                     const std::string& key) {
  const std::string s = config_string(cfg, key);
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config key '" + key + "': not a number: " + s);
  }
}

long config_long(const std::map<std::string, std::string>& cfg,
                 const std::string& key) {
  const std::string s = config_string(cfg, key);
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config key '" + key + "': not an integer: " + s);
  }
}

std::vector<double> config_list(const std::map<std::string, std::string>& cfg,
                                const std::string& key) {
  std::string s = config_string(cfg, key);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream iss(s);
  std::vector<double> out;
  double v;
  while (iss >> v) out.push_back(v);
  if (!iss.eof())
    throw std::runtime_error("config key '" + key + "': malformed list");
  if (out.empty())
    throw std::runtime_error("config key '" + key + "': empty list");
  return out;
}

std::string budget_kind_name(const std::optional<PrivacyBudget>& budget) {
  if (!budget) return "none";
  switch (budget->kind()) {
    case PrivacyBudget::Kind::kPure:
      return "pure";
    case PrivacyBudget::Kind::kZCDP:
      return "zcdp";
    case PrivacyBudget::Kind::kApprox:
      return "approx";
  }
  return "none";
}

double budget_value(const std::optional<PrivacyBudget>& budget) {
  if (!budget) return 0.0;
  switch (budget->kind()) {
    case PrivacyBudget::Kind::kPure:
    case PrivacyBudget::Kind::kApprox:
      return budget->epsilon();
    case PrivacyBudget::Kind::kZCDP:
      return budget->rho();
  }
  return 0.0;
}

std::string risk_csv_header() {
  return "metric,n,budget_kind,budget_value,risk_mean,risk_stderr,reps,seed";
}

std::string risk_csv_row(const RiskReport& report) {
  std::ostringstream row;
  row.precision(17);
  row << report.metric << "," << report.n << ","
      << budget_kind_name(report.budget) << "," << budget_value(report.budget)
      << "," << report.risk_mean << "," << report.risk_stderr << ","
      << report.reps << "," << report.seed;
  return row.str();
}

std::string bound_csv_header() {
  return "bound_kind,m,h,n,budget,value";
}

std::string bound_csv_row(const BoundReport& report) {
  std::ostringstream row;
  row.precision(17);
  row << report.kind << "," << report.m << "," << report.h << "," << report.n
      << "," << report.budget << "," << report.value;
  return row.str();
}

void write_curve_csv(const std::string& path,
                     const std::vector<std::pair<double, double>>& points,
                     const std::string& header) {
  std::ofstream out = open_out(path);
  out.precision(17);
  out << header << "\n";
  for (const auto& [x, y] : points) out << x << "," << y << "\n";
}

void write_svg_plot(
    const std::string& path,
    const std::vector<std::vector<std::pair<double, double>>>& curves,
    const std::string& title) {
  constexpr double kW = 640.0, kH = 480.0, kPad = 40.0;
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool first = true;
  for (const auto& curve : curves)
    for (const auto& [x, y] : curve) {
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;
  auto px = [&](double x) {
    return kPad + (x - xmin) / (xmax - xmin) * (kW - 2.0 * kPad);
  };
  auto py = [&](double y) {
    return kH - kPad - (y - ymin) / (ymax - ymin) * (kH - 2.0 * kPad);
  };
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::ofstream out = open_out(path);
  out.precision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
      << "\" height=\"" << kH << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kW / 2 << "\" y=\"20\" text-anchor=\"middle\">"
      << title << "</text>\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    out << "<polyline fill=\"none\" stroke=\"" << kColors[c % 4]
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : curves[c]) out << px(x) << "," << py(y) << " ";
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace io
}  // namespace dpdens
