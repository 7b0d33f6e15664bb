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

// Grover's digital search: selective inverters, the driver unitary, the
// iterate G = -U I_0 U^-1 I_w and full search runs.

#include "qsearch/errors.hpp"
#include "qsearch/linalg.hpp"
#include "qsearch/plane.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

namespace qsearch {

/// A search instance with exactly one marked element: f(i) = [i == target].
class SearchProblem {
 public:
  SearchProblem(int qubits, Index target)
      : qubits_(qubits),
        dim_(detail::dimension_for(qubits, kMaxOperatorQubits)),
        target_(target) {
    detail::require(target >= 0 && target < dim_,
                    "target " + std::to_string(target) + " outside [0, " +
                        std::to_string(dim_) + ")");
  }

  int qubits() const { return qubits_; }
  Index dim() const { return dim_; }
  Index target() const { return target_; }
  bool marked(Index i) const { return i == target_; }

 private:
  int qubits_;
  Index dim_;
  Index target_;
};

/// U with <w|U|0> rotated onto the positive real axis, plus x = <w|U|0> and
/// theta = arccos x. Build through make_driver.
template <typename Real>
struct DriverUnitary {
  DenseOperator<Real> unitary;
  Real overlap{};
  Real angle{};

  StateVector<Real> start_state() const { return unitary.col(0); }
};

/// I - 2|index><index|
template <typename Real = double>
DenseOperator<Real> selective_inverter(Index dim, Index index) {
  detail::require(index >= 0 && index < dim, "inverter index out of range");
  DenseOperator<Real> out = DenseOperator<Real>::Identity(dim, dim);
  out(index, index) = Real(-1);
  return out;
}

template <typename Real = double>
DenseOperator<Real> oracle_inverter(const SearchProblem& p) {
  return selective_inverter<Real>(p.dim(), p.target());
}

template <typename Real = double>
DenseOperator<Real> zero_inverter(Index dim) {
  detail::require(dim >= 2, "zero inverter needs dimension >= 2");
  return selective_inverter<Real>(dim, 0);
}

/// Entry (i, j) = 2^{-n/2} (-1)^{popcount(i & j)}.
template <typename Real = double>
DenseOperator<Real> walsh_hadamard(int qubits) {
  const Index dim = detail::dimension_for(qubits, kMaxOperatorQubits);
  const Real scale = Real(1) / std::sqrt(Real(dim));
  DenseOperator<Real> out(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      const auto parity = std::popcount(static_cast<std::uint64_t>(i & j)) & 1;
      out(i, j) = parity ? -scale : scale;
    }
  }
  return out;
}

template <typename Real>
DriverUnitary<Real> make_driver(const DenseOperator<Real>& u, const SearchProblem& p) {
  detail::require(u.rows() == p.dim() && u.cols() == p.dim(),
                  "driver dimension does not match the search problem");
  detail::require(is_unitary(u), "driver is not unitary");
  const Complex<Real> amplitude = u(p.target(), 0);
  const Real x = std::abs(amplitude);
  if (x < Real(1e-12)) {
    throw OrthogonalStartError("<w|U|0> vanishes: U|0> is orthogonal to the target");
  }
  if (x > Real(1) - Real(1e-12)) {
    throw DegeneratePlaneError("U|0> already equals the target up to phase");
  }
  DriverUnitary<Real> d;
  d.unitary = u * (std::conj(amplitude) / x);
  d.overlap = x;
  d.angle = std::acos(x);
  return d;
}

/// G = -U I_0 U^-1 I_w. Both inverters are diagonal, so they are applied as
/// column sign flips.
template <typename Real>
DenseOperator<Real> grover_iterate(const DriverUnitary<Real>& d, const SearchProblem& p) {
  const auto& u = d.unitary;
  detail::require(u.rows() == p.dim() && u.cols() == p.dim(),
                  "driver dimension does not match the search problem");
  DenseOperator<Real> u_i0 = u;
  u_i0.col(0) *= Real(-1);
  DenseOperator<Real> g = -(u_i0 * u.adjoint());
  g.col(p.target()) *= Real(-1);
  return g;
}

/// G in (sigma, w) coordinates: G|sigma> = (1 - 4x^2)|sigma> + 2x|w>,
/// G|w> = -2x|sigma> + |w>.
template <typename Real>
PlaneMatrix<Real> grover_on_plane(Real x) {
  detail::require(x > Real(0) && x < Real(1), "overlap must lie in (0, 1)");
  PlaneMatrix<Real> g;
  g << Real(1) - Real(4) * x * x, Real(-2) * x,
       Real(2) * x, Real(1);
  return g;
}

struct IterationCounts {
  long paper;    // ceil(pi / 4x)
  long optimal;  // round(pi / (4 arcsin x) - 1/2)
};

template <typename Real>
IterationCounts iteration_count(Real x) {
  detail::require(x > Real(0) && x < Real(1), "overlap must lie in (0, 1)");
  const Real pi = std::numbers::pi_v<Real>;
  return {static_cast<long>(std::ceil(pi / (Real(4) * x))),
          std::lround(pi / (Real(4) * std::asin(x)) - Real(0.5))};
}

template <typename Real>
struct GroverRun {
  StateVector<Real> state;
  Real success_probability{};
  /// |<w|G^j psi>|^2 for j = 0..k.
  std::vector<Real> probabilities;
};

/// Applies G k times to psi = U|0>.
template <typename Real>
GroverRun<Real> run_grover(const SearchProblem& p, const DriverUnitary<Real>& d, long k) {
  detail::require(k >= 0, "iteration count must be non-negative");
  const DenseOperator<Real> g = grover_iterate(d, p);
  GroverRun<Real> run;
  run.state = d.start_state();
  run.probabilities.reserve(static_cast<std::size_t>(k) + 1);
  run.probabilities.push_back(std::norm(run.state(p.target())));
  for (long j = 0; j < k; ++j) {
    run.state = (g * run.state).eval();
    run.probabilities.push_back(std::norm(run.state(p.target())));
  }
  run.success_probability = run.probabilities.back();
  return run;
}

}  // namespace qsearch
