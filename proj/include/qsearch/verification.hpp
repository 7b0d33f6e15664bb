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

// Sweepable numerical checks of the analog/digital correspondence. Every
// check uses the Walsh-Hadamard driver, sigma = psi = 2^{-n/2} sum_i |i>, and
// x = 2^{-n/2}.

#include "qsearch/linalg.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace qsearch {

struct CheckReport {
  std::string check_name;
  int n = 0;
  Index dim = 0;
  double x = 0;
  double t0 = 0;
  double measured = 0;
  double predicted = 0;
  double tolerance = 0;
  bool passed = false;
};

/// Fills dim, x and t0 from n and sets passed = |measured - predicted| <= tolerance.
CheckReport make_report(std::string check_name, int n, double measured,
                        double predicted, double tolerance);

inline bool recompute_passed(const CheckReport& r) {
  return std::abs(r.measured - r.predicted) <= r.tolerance;
}

struct SweepMetadata {
  std::uint64_t seed = 0;
  std::string timestamp;
  std::string tool_version;
};

struct SweepResult {
  std::vector<CheckReport> rows;
  SweepMetadata metadata;

  bool all_passed() const;
};

inline constexpr double kIdentityTolerance = 1e-9;

/// ||e^{-iH t} - (G + 2P)|| and ||e^{-2iH t} - G^2|| at t = time_scale * t0.
/// Both are exactly zero at time_scale = 1.
std::array<CheckReport, 2> verify_theorem_main(int n, Index target = 0,
                                               double time_scale = 1.0);

/// ||e^{-iH} - (G + 2P)|| against (2/3) x^3 sqrt(1 - x^2), tolerance 5 x^5.
CheckReport norm_gap_vs_prediction(int n, Index target = 0);

/// ||e^{-iH} - (G + 2P)|| against (4/3) x^3 sqrt(1 - x^2), tolerance 5 x^5.
CheckReport norm_gap_corrected(int n, Index target = 0);

/// ||e^{-iHt}|sigma> - |w>|; defaults to t = (pi/4) sqrt(N).
double corollary_gap(int n, Index target = 0);
double corollary_gap_at(int n, double t, Index target = 0);

/// corollary_gap(n) against 0 with tolerance 3 C / N, where C = N corollary_gap
/// at the n = 4 anchor.
CheckReport verify_corollary(int n, Index target = 0);

/// As verify_corollary with tolerance 3 C' / sqrt(N), C' = sqrt(N) corollary_gap
/// at n = 4.
CheckReport verify_corollary_sqrt(int n, Index target = 0);

/// |<w|e^{-iH't}|sigma>| against 1 and ||e^{-iH't}|sigma> + i e^{-i pi/2x}|w>||
/// against 0, at t = time_scale * pi / (2Ex).
std::array<CheckReport, 2> verify_fg_arrival(int n, double energy = 1.0,
                                             Index target = 0,
                                             double time_scale = 1.0);

struct NRange {
  int first = 0;
  int last = 0;
};

struct SweepOptions {
  std::uint64_t seed = 0;
  double energy = 1.0;
  Index target = 0;
};

/// Valid check names, in sweep order.
const std::vector<std::string>& check_names();

/// "all" or a comma-separated list; throws std::invalid_argument on unknown
/// names, listing the valid ones.
std::vector<std::string> parse_check_list(const std::string& spec);

/// "a..b" or "a".
NRange parse_n_range(const std::string& spec);

SweepResult run_sweep(const std::vector<std::string>& checks, NRange range,
                      const SweepOptions& options = {});

}  // namespace qsearch
