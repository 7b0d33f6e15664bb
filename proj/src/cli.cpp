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

#include "qsearch/cli.hpp"

#include "qsearch/grover.hpp"
#include "qsearch/hamiltonian.hpp"
#include "qsearch/report.hpp"
#include "qsearch/verification.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <optional>
#include <vector>

namespace qsearch {
namespace {

using Op = DenseOperator<double>;
using Vec = StateVector<double>;
constexpr std::complex<double> kI{0.0, 1.0};
constexpr int kMaxEvolveQubits = 10;

/// Invalid flag values detected after parsing; reported as usage errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  int n = 0;
  Index w = 0;
  std::string hamiltonian;
  std::string t = "t0";
  double eps = 0.0;
  long max_steps = -1;
  std::string k = "optimal";
  std::string driver = "hadamard";
  std::string checks = "all";
  std::string n_range = "2..8";
  std::string format = "csv";
  std::uint64_t seed = 0;
  double energy = 1.0;
  std::string out;
};

void add_output_flags(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", cfg.out, "Write output to this file instead of stdout");
}

void require_usage(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

SearchProblem make_problem(const CliConfig& cfg, int max_qubits) {
  require_usage(cfg.n >= 1 && cfg.n <= max_qubits,
                "--n must be in [1, " + std::to_string(max_qubits) + "]");
  require_usage(cfg.w >= 0 && cfg.w < (Index{1} << cfg.n),
                "--w must be in [0, 2^n)");
  return SearchProblem(cfg.n, cfg.w);
}

void emit_summary(std::ostream& os, const nlohmann::ordered_json& summary) {
  for (const auto& [key, value] : summary.items()) {
    os << "# " << key << '=';
    if (value.is_number_float()) {
      os << format_double(value.get<double>());
    } else if (value.is_string()) {
      os << value.get<std::string>();
    } else {
      os << value.dump();
    }
    os << '\n';
  }
}

// ---------------------------------------------------------------------------

int cmd_grover(const CliConfig& cfg, std::ostream& os) {
  const SearchProblem p = make_problem(cfg, kMaxOperatorQubits);
  require_usage(cfg.driver == "hadamard" || cfg.driver == "random",
                "--driver must be hadamard or random");
  const Op u = cfg.driver == "hadamard" ? walsh_hadamard<double>(cfg.n)
                                        : random_unitary<double>(p.dim(), cfg.seed);
  const auto driver = make_driver(u, p);
  const auto counts = iteration_count(driver.overlap);

  long k = 0;
  if (cfg.k == "optimal") {
    k = counts.optimal;
  } else if (cfg.k == "paper") {
    k = counts.paper;
  } else {
    std::size_t used = 0;
    try {
      k = std::stol(cfg.k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require_usage(used == cfg.k.size() && k >= 0,
                  "--k must be a non-negative integer, 'optimal' or 'paper'");
  }

  const long horizon = std::max({k, counts.paper, counts.optimal});
  const auto run = run_grover(p, driver, horizon);
  Vec state = run.state;
  if (k != horizon) state = run_grover(p, driver, k).state;
  Index most_likely = 0;
  const double top = state.cwiseAbs2().maxCoeff(&most_likely);
  double max_other = 0.0;
  for (Index i = 0; i < state.size(); ++i) {
    if (i != p.target()) max_other = std::max(max_other, std::norm(state(i)));
  }

  nlohmann::ordered_json summary = {
      {"n", cfg.n},
      {"N", p.dim()},
      {"w", p.target()},
      {"driver", cfg.driver},
      {"x", driver.overlap},
      {"theta", driver.angle},
      {"k", k},
      {"k_mode", cfg.k},
      {"paper_k", counts.paper},
      {"optimal_k", counts.optimal},
      {"paper_probability", run.probabilities[static_cast<std::size_t>(counts.paper)]},
      {"optimal_probability", run.probabilities[static_cast<std::size_t>(counts.optimal)]},
      {"success_probability", run.probabilities[static_cast<std::size_t>(k)]},
      {"most_likely_outcome", most_likely},
      {"most_likely_probability", top},
      {"max_other_probability", max_other},
  };
  const std::vector<double> per_iteration(run.probabilities.begin(),
                                          run.probabilities.begin() + k + 1);
  if (cfg.format == "json") {
    summary["probabilities"] = per_iteration;
    os << summary.dump(2) << '\n';
  } else {
    os << "iteration,success_probability\n";
    for (std::size_t j = 0; j < per_iteration.size(); ++j) {
      os << j << ',' << format_double(per_iteration[j]) << '\n';
    }
    emit_summary(os, summary);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

double resolve_time(const CliConfig& cfg, const HamiltonianFamily<double>& fam) {
  const std::string& t = cfg.t;
  if (t == "arrival") {
    return cfg.hamiltonian == "fg" ? fg_arrival_time(fam.overlap(), fam.energy())
                                   : h_arrival_time(fam.overlap(), fam.energy());
  }
  double multiple = 1.0;
  std::string number = t;
  if (t.size() >= 2 && t.compare(t.size() - 2, 2, "t0") == 0) {
    number = t.substr(0, t.size() - 2);
    if (number.empty()) return fam.grover_time();
    multiple = fam.grover_time();
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require_usage(used == number.size() && std::isfinite(value) && value >= 0.0,
                "--t must be a non-negative number, 't0', '<m>t0' or 'arrival'");
  return value * multiple;
}

int cmd_evolve(const CliConfig& cfg, std::ostream& os) {
  const SearchProblem p = make_problem(cfg, kMaxEvolveQubits);
  require_usage(cfg.hamiltonian == "fg" || cfg.hamiltonian == "commutator" ||
                    cfg.hamiltonian == "augmented",
                "--hamiltonian must be fg, commutator or augmented");
  require_usage(std::isfinite(cfg.energy) && cfg.energy > 0.0, "--energy must be positive");

  const auto driver = make_driver<double>(walsh_hadamard<double>(cfg.n), p);
  const HamiltonianFamily<double> fam(driver.start_state(), p.target(), cfg.energy);
  const double t = resolve_time(cfg, fam);

  const Op& h = cfg.hamiltonian == "fg"           ? fam.h_prime()
                : cfg.hamiltonian == "commutator" ? fam.h()
                                                  : fam.h_tilde();
  const Op propagator = matrix_exponential(Op(-kI * t * h));
  const Vec state = propagator * fam.sigma();
  const auto coords = plane_coordinates(state, fam.sigma(), p.target());

  nlohmann::ordered_json report = {
      {"hamiltonian", cfg.hamiltonian},
      {"n", cfg.n},
      {"N", p.dim()},
      {"w", p.target()},
      {"x", fam.overlap()},
      {"E", fam.energy()},
      {"t", t},
      {"t0", fam.grover_time()},
      {"fidelity", std::norm(state(p.target()))},
      {"c_sigma_re", coords.c_sigma.real()},
      {"c_sigma_im", coords.c_sigma.imag()},
      {"c_w_re", coords.c_w.real()},
      {"c_w_im", coords.c_w.imag()},
      {"out_of_plane", out_of_plane_norm(state, fam.sigma(), p.target())},
  };

  if (cfg.hamiltonian != "fg") {
    // e^{-iHm t0} = (G + 2P)^m = G^m + 2P for odd m and G^m for even m;
    // e^{-iH~m t0} = G^m.
    const long m = std::lround(t / fam.grover_time());
    const Op g = grover_iterate(driver, p);
    Op reference = Op::Identity(p.dim(), p.dim());
    for (long j = 0; j < m; ++j) reference = (reference * g).eval();
    if (cfg.hamiltonian == "commutator" && (m % 2 == 1)) reference += 2.0 * fam.projector();
    report["grover_power"] = m;
    report["distance_to_grover"] = operator_norm(propagator - reference);
  }

  if (cfg.format == "json") {
    os << report.dump(2) << '\n';
    return kExitOk;
  }
  std::string header;
  std::string row;
  for (const auto& [key, value] : report.items()) {
    header += (header.empty() ? "" : ",") + key;
    std::string cell = value.is_number_float() ? format_double(value.get<double>())
                       : value.is_string()     ? value.get<std::string>()
                                               : value.dump();
    row += (row.empty() ? "" : ",") + cell;
  }
  os << header << '\n' << row << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_naive(const CliConfig& cfg, std::ostream& os) {
  require_usage(std::isfinite(cfg.eps) && cfg.eps > 0.0 && cfg.eps <= 0.1,
                "--eps must lie in (0, 0.1]");
  const SearchProblem p = make_problem(cfg, kMaxOperatorQubits);
  const long max_steps =
      cfg.max_steps >= 0 ? cfg.max_steps : static_cast<long>(std::ceil(2.0 / cfg.eps));
  const auto traj = naive_search(p, cfg.eps, max_steps);

  // Continuous-time arrival of e^{tA} psi: A rotates the plane at rate
  // sqrt(N) sin(theta), starting theta away from |w>.
  const double x = 1.0 / std::sqrt(static_cast<double>(p.dim()));
  const double theta = std::acos(x);
  const double rate = std::sqrt(static_cast<double>(p.dim())) * std::sin(theta);
  nlohmann::ordered_json summary = {
      {"n", cfg.n},
      {"N", p.dim()},
      {"w", p.target()},
      {"eps", cfg.eps},
      {"max_steps", max_steps},
      {"peak_step", traj.peak_step},
      {"peak_amplitude", traj.peak_amplitude},
      {"continuous_peak_step", theta / (cfg.eps * rate)},
  };
  if (cfg.format == "json") {
    summary["amplitudes"] = traj.amplitudes;
    os << summary.dump(2) << '\n';
  } else {
    os << "step,w_amplitude\n";
    for (std::size_t k = 0; k < traj.amplitudes.size(); ++k) {
      os << k << ',' << format_double(traj.amplitudes[k]) << '\n';
    }
    emit_summary(os, summary);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_verify(const CliConfig& cfg, std::ostream& os, std::ostream& err) {
  std::vector<std::string> checks;
  NRange range;
  try {
    checks = parse_check_list(cfg.checks);
    range = parse_n_range(cfg.n_range);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  require_usage(range.first <= range.last, "--n range is reversed");
  require_usage(std::isfinite(cfg.energy) && cfg.energy > 0.0, "--energy must be positive");

  SweepOptions options;
  options.seed = cfg.seed;
  options.energy = cfg.energy;
  options.target = cfg.w;
  SweepResult result;
  try {
    result = run_sweep(checks, range, options);
  } catch (const OrthogonalStartError&) {
    throw;
  } catch (const DegeneratePlaneError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (cfg.format == "json") {
    os << to_json(result).dump(2) << '\n';
  } else {
    write_csv(os, result);
  }
  if (result.all_passed()) return kExitOk;
  for (const auto& r : result.rows) {
    if (r.passed) continue;
    err << "FAILED " << r.check_name << " n=" << r.n << " measured=" << format_double(r.measured)
        << " predicted=" << format_double(r.predicted)
        << " tolerance=" << format_double(r.tolerance) << '\n';
  }
  return kExitChecksFailed;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Grover search, its analog Hamiltonians, and numerical checks of their "
               "correspondence"};
  app.name(args.empty() ? "qsearch" : args.front());
  app.require_subcommand(1);

  auto* grover = app.add_subcommand("grover", "Run Grover's digital search");
  grover->add_option("--n", cfg.n, "Qubit count")->required();
  grover->add_option("--w", cfg.w, "Target index");
  grover->add_option("--k", cfg.k, "Iterations: integer, 'optimal' or 'paper'");
  grover->add_option("--driver", cfg.driver, "Driver unitary: hadamard or random");
  grover->add_option("--seed", cfg.seed, "Seed for --driver random");
  add_output_flags(grover, cfg);

  auto* evolve = app.add_subcommand("evolve", "Evolve the uniform state under an analog Hamiltonian");
  evolve->add_option("--n", cfg.n, "Qubit count")->required();
  evolve->add_option("--w", cfg.w, "Target index");
  evolve->add_option("--hamiltonian", cfg.hamiltonian, "fg, commutator or augmented")->required();
  evolve->add_option("--t", cfg.t, "Time: number, 't0', '<m>t0' or 'arrival'");
  evolve->add_option("--energy", cfg.energy, "Energy scale E");
  add_output_flags(evolve, cfg);

  auto* naive = app.add_subcommand("naive", "Iterate the incremental I + eps A search");
  cfg.n = 2;
  naive->add_option("--n", cfg.n, "Qubit count");
  naive->add_option("--w", cfg.w, "Target index");
  naive->add_option("--eps", cfg.eps, "Step size in (0, 0.1]")->required();
  naive->add_option("--max-steps", cfg.max_steps, "Steps to simulate (default ceil(2/eps))");
  add_output_flags(naive, cfg);

  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->add_option("--checks", cfg.checks, "'all' or a comma-separated list of checks");
  verify->add_option("--n", cfg.n_range, "Qubit range a..b");
  verify->add_option("--w", cfg.w, "Target index");
  verify->add_option("--energy", cfg.energy, "Energy scale E for fg_arrival");
  verify->add_option("--seed", cfg.seed, "Seed recorded in the report metadata");
  add_output_flags(verify, cfg);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("qsearch");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "error: cannot open " << cfg.out << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& os = cfg.out.empty() ? out : file;

  try {
    if (*grover) return cmd_grover(cfg, os);
    if (*evolve) return cmd_evolve(cfg, os);
    if (*naive) return cmd_naive(cfg, os);
    return cmd_verify(cfg, os, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OrthogonalStartError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DegeneratePlaneError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qsearch
