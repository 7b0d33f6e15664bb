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

#include "qsearch/verification.hpp"

#include "qsearch/grover.hpp"
#include "qsearch/hamiltonian.hpp"
#include "qsearch/version.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qsearch {
namespace {

using Op = DenseOperator<double>;
using Vec = StateVector<double>;
constexpr std::complex<double> kI{0.0, 1.0};
constexpr int kCorollaryAnchor = 4;

double overlap_for(int n) { return std::pow(2.0, -0.5 * n); }

void require_n(int n, int lo, int hi, const char* check) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(std::string(check) + " needs n in [" +
                                std::to_string(lo) + ", " + std::to_string(hi) +
                                "], got " + std::to_string(n));
  }
}

// Grover setup shared by the Theorem-style checks.
struct GroverSetup {
  SearchProblem problem;
  DriverUnitary<double> driver;
  Op g;
  HamiltonianFamily<double> family;

  GroverSetup(int n, Index target)
      : problem(n, target),
        driver(make_driver<double>(walsh_hadamard<double>(n), problem)),
        g(grover_iterate(driver, problem)),
        family(driver.start_state(), target, 1.0) {}

  Op g_plus_2p() const { return g + 2.0 * family.projector(); }
};

double grover_plane_gap_at_unit_time(int n, Index target) {
  const GroverSetup s(n, target);
  const Op u = matrix_exponential(Op(-kI * s.family.h()));
  return operator_norm(u - s.g_plus_2p());
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

CheckReport make_report(std::string check_name, int n, double measured,
                        double predicted, double tolerance) {
  CheckReport r;
  r.check_name = std::move(check_name);
  r.n = n;
  r.dim = Index{1} << n;
  r.x = overlap_for(n);
  r.t0 = grover_time(r.x);
  r.measured = measured;
  r.predicted = predicted;
  r.tolerance = tolerance;
  r.passed = recompute_passed(r);
  return r;
}

bool SweepResult::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckReport& r) { return r.passed; });
}

std::array<CheckReport, 2> verify_theorem_main(int n, Index target, double time_scale) {
  require_n(n, 2, 10, "theorem_main");
  const GroverSetup s(n, target);
  const double t = time_scale * s.family.grover_time();
  const Op u = matrix_exponential(Op(-kI * t * s.family.h()));
  const Op u2 = u * u;
  const double gap = operator_norm(u - s.g_plus_2p());
  const double gap2 = operator_norm(u2 - s.g * s.g);
  return {make_report("theorem_main.g_plus_2p", n, gap, 0.0, kIdentityTolerance),
          make_report("theorem_main.g_squared", n, gap2, 0.0, kIdentityTolerance)};
}

CheckReport norm_gap_vs_prediction(int n, Index target) {
  require_n(n, 2, 10, "norm_gap");
  const double x = overlap_for(n);
  const double predicted = 2.0 / 3.0 * x * x * x * std::sqrt(1.0 - x * x);
  return make_report("norm_gap", n, grover_plane_gap_at_unit_time(n, target), predicted,
                     5.0 * std::pow(x, 5));
}

CheckReport norm_gap_corrected(int n, Index target) {
  require_n(n, 2, 10, "norm_gap_corrected");
  const double x = overlap_for(n);
  const double predicted = 4.0 / 3.0 * x * x * x * std::sqrt(1.0 - x * x);
  return make_report("norm_gap_corrected", n, grover_plane_gap_at_unit_time(n, target),
                     predicted, 5.0 * std::pow(x, 5));
}

double corollary_gap_at(int n, double t, Index target) {
  require_n(n, 2, kMaxOperatorQubits, "corollary");
  const SearchProblem p(n, target);
  const Vec sigma = uniform_state<double>(n);
  const Op h = commutator_hamiltonian(sigma, target, 1.0);
  const Vec evolved = exponential_action(Op(-kI * t * h), sigma);
  return (evolved - basis_state<double>(p.dim(), target)).norm();
}

double corollary_gap(int n, Index target) {
  const double t = std::numbers::pi / 4.0 * std::sqrt(std::ldexp(1.0, n));
  return corollary_gap_at(n, t, target);
}

CheckReport verify_corollary(int n, Index target) {
  const double anchor_dim = std::ldexp(1.0, kCorollaryAnchor);
  const double c = anchor_dim * corollary_gap(kCorollaryAnchor, 0);
  const double dim = std::ldexp(1.0, n);
  return make_report("corollary", n, corollary_gap(n, target), 0.0, 3.0 * c / dim);
}

CheckReport verify_corollary_sqrt(int n, Index target) {
  const double c = std::sqrt(std::ldexp(1.0, kCorollaryAnchor)) * corollary_gap(kCorollaryAnchor, 0);
  const double dim = std::ldexp(1.0, n);
  return make_report("corollary_sqrt", n, corollary_gap(n, target), 0.0,
                     3.0 * c / std::sqrt(dim));
}

std::array<CheckReport, 2> verify_fg_arrival(int n, double energy, Index target,
                                             double time_scale) {
  require_n(n, 2, 10, "fg_arrival");
  const SearchProblem p(n, target);
  const auto driver = make_driver<double>(walsh_hadamard<double>(n), p);
  const Vec sigma = driver.start_state();
  const double x = driver.overlap;
  const double t = time_scale * fg_arrival_time(x, energy);
  const Op h = fg_hamiltonian(sigma, target, energy);
  const Vec evolved = exponential_action(Op(-kI * t * h), sigma);

  Vec expected = Vec::Zero(p.dim());
  expected(target) = -kI * std::polar(1.0, -std::numbers::pi / (2.0 * x));
  return {make_report("fg_arrival.fidelity", n, std::abs(evolved(target)), 1.0,
                      kIdentityTolerance),
          make_report("fg_arrival.state", n, (evolved - expected).norm(), 0.0,
                      kIdentityTolerance)};
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "theorem_main", "norm_gap", "norm_gap_corrected", "corollary", "corollary_sqrt",
      "fg_arrival"};
  return names;
}

std::vector<std::string> parse_check_list(const std::string& spec) {
  if (spec == "all") return check_names();
  std::vector<std::string> out;
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    const auto& valid = check_names();
    if (std::find(valid.begin(), valid.end(), name) == valid.end()) {
      std::string list;
      for (const auto& v : valid) list += (list.empty() ? "" : ", ") + v;
      throw std::invalid_argument("unknown check '" + name + "'; valid checks: all, " + list);
    }
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

NRange parse_n_range(const std::string& spec) {
  const auto bad = [&] {
    return std::invalid_argument("n range must be 'a..b' or 'a', got '" + spec + "'");
  };
  const auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != s.size()) throw bad();
    return v;
  };
  const auto dots = spec.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(spec);
    return {v, v};
  }
  return {to_int(spec.substr(0, dots)), to_int(spec.substr(dots + 2))};
}

SweepResult run_sweep(const std::vector<std::string>& checks, NRange range,
                      const SweepOptions& options) {
  if (range.first > range.last) {
    throw std::invalid_argument("n range is reversed: " + std::to_string(range.first) +
                                ".." + std::to_string(range.last));
  }
  using Runner = std::function<void(int, std::vector<CheckReport>&)>;
  const Index target = options.target;
  const std::map<std::string, Runner> runners = {
      {"theorem_main",
       [&](int n, auto& rows) {
         for (auto& r : verify_theorem_main(n, target)) rows.push_back(std::move(r));
       }},
      {"norm_gap", [&](int n, auto& rows) { rows.push_back(norm_gap_vs_prediction(n, target)); }},
      {"norm_gap_corrected",
       [&](int n, auto& rows) { rows.push_back(norm_gap_corrected(n, target)); }},
      {"corollary", [&](int n, auto& rows) { rows.push_back(verify_corollary(n, target)); }},
      {"corollary_sqrt",
       [&](int n, auto& rows) { rows.push_back(verify_corollary_sqrt(n, target)); }},
      {"fg_arrival",
       [&](int n, auto& rows) {
         for (auto& r : verify_fg_arrival(n, options.energy, target)) rows.push_back(std::move(r));
       }},
  };

  SweepResult result;
  result.metadata = {options.seed, utc_timestamp(), kToolVersion};
  for (const auto& name : checks) {
    parse_check_list(name);  // throws with the valid list
    const auto& runner = runners.at(name);
    for (int n = range.first; n <= range.last; ++n) runner(n, result.rows);
  }
  std::stable_sort(result.rows.begin(), result.rows.end(),
                   [](const CheckReport& a, const CheckReport& b) {
                     return std::tie(a.check_name, a.n) < std::tie(b.check_name, b.n);
                   });
  return result;
}

}  // namespace qsearch
