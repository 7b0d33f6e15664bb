// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsearch/report.hpp"

#include <array>
#include <charconv>

namespace qsearch {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return "nan";
  return {buf.data(), end};
}

void write_csv(std::ostream& os, const SweepResult& result) {
  const auto& m = result.metadata;
  os << "# qsearch " << m.tool_version << " seed=" << m.seed << " timestamp=" << m.timestamp
     << '\n';
  os << "check_name,n,N,x,t0,measured,predicted,tolerance,passed\n";
  for (const auto& r : result.rows) {
    os << r.check_name << ',' << r.n << ',' << r.dim << ',' << format_double(r.x) << ','
       << format_double(r.t0) << ',' << format_double(r.measured) << ','
       << format_double(r.predicted) << ',' << format_double(r.tolerance) << ','
       << (r.passed ? "true" : "false") << '\n';
  }
}

nlohmann::ordered_json to_json(const CheckReport& r) {
  return {{"check_name", r.check_name}, {"n", r.n},
          {"N", r.dim},                 {"x", r.x},
          {"t0", r.t0},                 {"measured", r.measured},
          {"predicted", r.predicted},   {"tolerance", r.tolerance},
          {"passed", r.passed}};
}

nlohmann::ordered_json to_json(const SweepResult& result) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : result.rows) rows.push_back(to_json(r));
  return {{"metadata",
           {{"seed", result.metadata.seed},
            {"timestamp", result.metadata.timestamp},
            {"tool_version", result.metadata.tool_version}}},
          {"all_passed", result.all_passed()},
          {"rows", std::move(rows)}};
}

}  // namespace qsearch
