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

#ifndef DPDENS_IO_HPP
#define DPDENS_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "dpdens/bounds.hpp"
#include "dpdens/densities.hpp"
#include "dpdens/risk.hpp"

namespace dpdens {
namespace io {

/// Datasets are one decimal float per line. Parse failures and out-of-range
/// values raise std::runtime_error naming the line.
std::vector<double> read_dataset(const std::string& path);
void write_dataset(const std::string& path, const std::vector<double>& data);

/// key = value configuration, one pair per line, '#' comments. Keys outside
/// `allowed` raise std::runtime_error naming the key.
std::map<std::string, std::string> read_config(
    const std::string& path, const std::vector<std::string>& allowed);

double config_double(const std::map<std::string, std::string>& cfg,
                     const std::string& key);
long config_long(const std::map<std::string, std::string>& cfg,
                 const std::string& key);
std::string config_string(const std::map<std::string, std::string>& cfg,
                          const std::string& key);
bool config_has(const std::map<std::string, std::string>& cfg,
                const std::string& key);
/// Whitespace- or comma-separated list of numbers.
std::vector<double> config_list(const std::map<std::string, std::string>& cfg,
                                const std::string& key);

std::string risk_csv_header();
std::string risk_csv_row(const RiskReport& report);
std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& report);

/// x,y rows sampled from a callable on a uniform grid over [0, 1].
void write_curve_csv(const std::string& path,
                     const std::vector<std::pair<double, double>>& points,
                     const std::string& header);

/// Minimal SVG polyline of the given curves (decoration only, never parsed
/// back by anything in this repository).
void write_svg_plot(const std::string& path,
                    const std::vector<std::vector<std::pair<double, double>>>&
                        curves,
                    const std::string& title);

std::string budget_kind_name(const std::optional<PrivacyBudget>& budget);
double budget_value(const std::optional<PrivacyBudget>& budget);

}  // namespace io
}  // namespace dpdens

#endif  // DPDENS_IO_HPP
