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

#include "oracles.hpp"

#include "qsearch/grover.hpp"
#include "qsearch/hamiltonian.hpp"
#include "qsearch/report.hpp"
#include "qsearch/verification.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace qsearch;
using namespace qsearch::testing;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("make_report", "[verification]") {
  const auto r = make_report("probe", 4, 0.1, 0.0, 0.2);
  CHECK(r.dim == 16);
  CHECK(r.x == 0.25);
  CHECK_THAT(r.t0, WithinAbs(1.0438681814194257, 1e-14));
  CHECK(r.passed);
  CHECK(recompute_passed(r));

  const auto miss = make_report("probe", 2, 1.0, 0.0, 0.5);
  CHECK_FALSE(miss.passed);
  CHECK_FALSE(recompute_passed(miss));
  CHECK(make_report("edge", 2, 0.5, 0.0, 0.5).passed);
}

TEST_CASE("verify_theorem_main", "[verification]") {
  for (int n : {2, 6}) {
    const auto rows = verify_theorem_main(n);
    INFO("n = " << n);
    CHECK(rows[0].check_name == "theorem_main.g_plus_2p");
    CHECK(rows[1].check_name == "theorem_main.g_squared");
    for (const auto& r : rows) {
      CHECK(r.passed);
      CHECK(r.measured < 1e-11);
      CHECK(r.predicted == 0.0);
      CHECK(r.tolerance == kIdentityTolerance);
    }
  }

  SECTION("off-target time fails") {
    const auto rows = verify_theorem_main(4, 0, 1.1);
    CHECK(rows[0].measured > 1e-3);
    CHECK_FALSE(rows[0].passed);
    CHECK_FALSE(rows[1].passed);
  }

  SECTION("other targets") {
    for (Index w : {Index{1}, Index{7}, Index{15}}) {
      for (const auto& r : verify_theorem_main(4, w)) CHECK(r.passed);
    }
  }

  CHECK_THROWS_AS(verify_theorem_main(1), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem_main(11), std::invalid_argument);
}

TEST_CASE("unit-time gap", "[verification]") {
  const auto n4 = norm_gap_vs_prediction(4);
  CHECK_THAT(n4.measured, WithinAbs(0.0212371928894818, 1e-12));
  CHECK_THAT(n4.predicted, WithinAbs(0.0100858941307485, 1e-15));
  CHECK_THAT(n4.tolerance, WithinAbs(5.0 * std::pow(0.25, 5), 1e-18));

  // The measured gap follows (4/3) x^3, twice the (2/3) x^3 coefficient, so the
  // x^3 check can only pass at n = 2 where the tolerance dwarfs both.
  CHECK(norm_gap_vs_prediction(2).passed);
  for (int n = 3; n <= 8; ++n) {
    const auto r = norm_gap_vs_prediction(n);
    INFO("n = " << n);
    CHECK_FALSE(r.passed);
    CHECK_THAT(r.measured / r.predicted, WithinAbs(2.0, 0.25));
  }

  const auto g8 = norm_gap_vs_prediction(8).measured;
  const auto g10 = norm_gap_vs_prediction(10).measured;
  CHECK_THAT(g10 / g8, WithinAbs(0.125, 0.002));
  const double x10 = std::pow(2.0, -5.0);
  CHECK_THAT(g10 / std::pow(x10, 3), WithinAbs(4.0 / 3.0, 2e-3));

  for (int n = 2; n <= 8; ++n) {
    const auto r = norm_gap_corrected(n);
    INFO("n = " << n);
    CHECK(r.passed);
    CHECK(r.measured == norm_gap_vs_prediction(n).measured);
  }
  CHECK_THROWS_AS(norm_gap_vs_prediction(1), std::invalid_argument);
}

TEST_CASE("corollary_gap", "[verification]") {
  double previous = 2.0;
  for (int n = 2; n <= 10; ++n) {
    const double gap = corollary_gap(n);
    INFO("n = " << n);
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK_THAT(16.0 * corollary_gap(4), WithinAbs(3.24, 0.01));

  // At the arrival time theta / eta the state is |w> exactly.
  for (int n = 2; n <= 8; ++n) {
    const double x = std::pow(2.0, -0.5 * n);
    CHECK(corollary_gap_at(n, h_arrival_time(x, 1.0)) < 1e-9);
  }

  // Dense cross-check against the Pade exponential at n = 5.
  const SearchProblem p(5, 3);
  const auto driver = make_driver<double>(walsh_hadamard<double>(5), p);
  const Op h = commutator_hamiltonian(driver.start_state(), 3, 1.0);
  const double t = 0.25 * std::numbers::pi * std::sqrt(32.0);
  const Vec evolved = pade_exp(Op(-kI * t * h)) * driver.start_state();
  CHECK_THAT(corollary_gap(5, 3), WithinAbs((evolved - basis_state(32, 3)).norm(), 1e-10));
}

TEST_CASE("corollary checks", "[verification]") {
  // The distance shrinks like N^{-1/2}, not N^{-1}, so the 1/N band gives way.
  for (int n = 2; n <= 6; ++n) CHECK(verify_corollary(n).passed);
  CHECK_FALSE(verify_corollary(8).passed);
  for (int n = 2; n <= 10; ++n) {
    INFO("n = " << n);
    CHECK(verify_corollary_sqrt(n).passed);
  }
  const auto r = verify_corollary(6);
  CHECK(r.predicted == 0.0);
  CHECK_THAT(r.tolerance, WithinRel(3.0 * 16.0 * corollary_gap(4) / 64.0, 1e-12));
}

TEST_CASE("verify_fg_arrival", "[verification]") {
  for (int n = 2; n <= 8; ++n) {
    for (double energy : {1.0, 2.0}) {
      const auto rows = verify_fg_arrival(n, energy, 1);
      INFO("n = " << n << ", E = " << energy);
      CHECK(rows[0].check_name == "fg_arrival.fidelity");
      CHECK(rows[1].check_name == "fg_arrival.state");
      CHECK(rows[0].passed);
      CHECK(rows[1].passed);
    }
  }
  // Halfway there the amplitude on |w> is sin(pi/4) up to O(x).
  const auto half = verify_fg_arrival(10, 1.0, 0, 0.5);
  CHECK_THAT(half[0].measured, WithinAbs(0.70710678, 0.05));
  CHECK_FALSE(half[0].passed);
}

TEST_CASE("parse_check_list", "[verification]") {
  CHECK(parse_check_list("all") == check_names());
  CHECK(check_names().size() == 6);
  CHECK(parse_check_list("fg_arrival,theorem_main") ==
        std::vector<std::string>{"fg_arrival", "theorem_main"});
  CHECK(parse_check_list("corollary,corollary") == std::vector<std::string>{"corollary"});
  CHECK_THROWS_WITH(parse_check_list("theorem_main,bogus"),
                    ContainsSubstring("bogus") && ContainsSubstring("norm_gap_corrected"));
}

TEST_CASE("parse_n_range", "[verification]") {
  const auto r = parse_n_range("2..8");
  CHECK(r.first == 2);
  CHECK(r.last == 8);
  const auto single = parse_n_range("5");
  CHECK(single.first == 5);
  CHECK(single.last == 5);
  CHECK_THROWS_AS(parse_n_range("2..x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_n_range(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_n_range("3-4"), std::invalid_argument);
}

TEST_CASE("run_sweep", "[verification]") {
  SECTION("row count and order") {
    const auto result = run_sweep({"theorem_main"}, {2, 4});
    REQUIRE(result.rows.size() == 6);
    CHECK(result.all_passed());
    for (std::size_t i = 1; i < result.rows.size(); ++i) {
      const auto& a = result.rows[i - 1];
      const auto& b = result.rows[i];
      CHECK(std::tie(a.check_name, a.n) <= std::tie(b.check_name, b.n));
    }
    CHECK(result.rows.front().check_name == "theorem_main.g_plus_2p");
    CHECK(result.rows.front().n == 2);
  }

  SECTION("sorted across checks") {
    const auto result = run_sweep({"theorem_main", "fg_arrival"}, {2, 3});
    REQUIRE(result.rows.size() == 8);
    CHECK(result.rows.front().check_name == "fg_arrival.fidelity");
    CHECK(result.rows.back().check_name == "theorem_main.g_squared");
  }

  SECTION("empty and failing") {
    CHECK(run_sweep({}, {2, 4}).rows.empty());
    CHECK(run_sweep({}, {2, 4}).all_passed());
    CHECK_FALSE(run_sweep({"norm_gap"}, {3, 4}).all_passed());
  }

  SECTION("deterministic apart from the timestamp") {
    SweepOptions opts;
    opts.seed = 42;
    const auto a = run_sweep({"norm_gap_corrected", "corollary"}, {2, 5}, opts);
    const auto b = run_sweep({"norm_gap_corrected", "corollary"}, {2, 5}, opts);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].measured == b.rows[i].measured);
      CHECK(a.rows[i].passed == b.rows[i].passed);
    }
    CHECK(a.metadata.seed == 42);
    CHECK(a.metadata.tool_version == "0.1.0");
    CHECK(a.metadata.timestamp.size() == 20);
    CHECK(a.metadata.timestamp.back() == 'Z');
  }

  CHECK_THROWS_AS(run_sweep({"theorem_main"}, {5, 3}), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep({"nope"}, {2, 3}), std::invalid_argument);
}

TEST_CASE("report output", "[verification]") {
  SweepOptions opts;
  opts.seed = 7;
  const auto result = run_sweep({"theorem_main"}, {2, 2}, opts);

  std::ostringstream csv;
  write_csv(csv, result);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK_THAT(line, ContainsSubstring("# qsearch 0.1.0 seed=7 timestamp="));
  std::getline(lines, line);
  CHECK(line == "check_name,n,N,x,t0,measured,predicted,tolerance,passed");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 8);
    CHECK_THAT(line, ContainsSubstring(",2,4,0.5,1.20919957615614"));
    CHECK_THAT(line, ContainsSubstring(",true"));
  }
  CHECK(rows == 2);

  const auto json = to_json(result);
  CHECK(json["metadata"]["seed"] == 7);
  CHECK(json["all_passed"] == true);
  REQUIRE(json["rows"].size() == 2);
  const auto& row = json["rows"][0];
  std::vector<std::string> keys;
  for (const auto& item : row.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"check_name", "n", "N", "x", "t0", "measured",
                                         "predicted", "tolerance", "passed"});
  CHECK(row["N"] == 4);
  // Round trip through text keeps full precision.
  const auto reparsed = nlohmann::json::parse(json.dump());
  CHECK(reparsed["rows"][0]["t0"].get<double>() == result.rows[0].t0);

  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-20) == "1e-20");
}
