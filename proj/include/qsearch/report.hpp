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

#pragma once

#include "qsearch/verification.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>

namespace qsearch {

/// check_name,n,N,x,t0,measured,predicted,tolerance,passed, preceded by one
/// "# ..." metadata line.
void write_csv(std::ostream& os, const SweepResult& result);

nlohmann::ordered_json to_json(const CheckReport& row);
nlohmann::ordered_json to_json(const SweepResult& result);

/// Shortest round-trip decimal form.
std::string format_double(double value);

}  // namespace qsearch
