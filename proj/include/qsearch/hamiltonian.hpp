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

// Analog search Hamiltonians over the plane spanned by a start state |sigma>
// and the target |w>:
//
//   H_w = E|w><w|, H_D = E|sigma><sigma|
//   H'  = H_D + H_w                                (Farhi-Gutmann)
//   H   = (2i/E)[H_w, H_D] = 2iEx(|w><sigma| - |sigma><w|)
//   H~  = H + (pi/t0) P,  P the projector onto the plane's complement
//
// with x = <w|sigma> > 0, theta = arccos x and eta = E sin 2theta. Units have
// hbar = 1, so E t is dimensionless.

#include "qsearch/errors.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/linalg.hpp"
#include "qsearch/plane.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace qsearch {

inline constexpr double kOverlapFloor = 1e-12;

namespace detail {

template <typename Real>
void check_overlap(Real x) {
  require(std::isfinite(x), "overlap is not finite");
  if (x <= Real(kOverlapFloor)) {
    throw OrthogonalStartError("overlap " + std::to_string(x) +
                               " is zero: start state is orthogonal to the target");
  }
  if (x >= Real(1) - Real(kOverlapFloor)) {
    throw DegeneratePlaneError("overlap " + std::to_string(x) +
                               " is one: start state is parallel to the target");
  }
}

template <typename Real>
void check_energy(Real energy) {
  require(std::isfinite(energy) && energy > Real(0), "energy must be positive");
}

}  // namespace detail

/// Start state with its phase chosen so that <w|sigma> is real and positive.
template <typename Real>
struct AlignedStart {
  StateVector<Real> sigma;
  Real overlap{};
};

template <typename Real>
AlignedStart<Real> align_start(const StateVector<Real>& sigma, Index target) {
  detail::require(target >= 0 && target < sigma.size(), "target index out of range");
  detail::require(is_normalized(sigma, 1e-10), "start state is not normalized");
  const Complex<Real> amplitude = sigma(target);
  const Real x = std::abs(amplitude);
  detail::check_overlap(x);
  return {sigma * (std::conj(amplitude) / x), x};
}

// ---------------------------------------------------------------------------
// Farhi-Gutmann H'

template <typename Real>
DenseOperator<Real> fg_hamiltonian(const StateVector<Real>& sigma, Index target,
                                   Real energy = Real(1)) {
  detail::check_energy(energy);
  const auto start = align_start(sigma, target);
  DenseOperator<Real> h = energy * ket_bra(start.sigma, start.sigma);
  h(target, target) += energy;
  return h;
}

/// e^{-iH't}|sigma> = e^{-iEt}[cos(xEt)|sigma> - i sin(xEt)|w>]
template <typename Real>
PlaneCoords<Real> fg_evolution_closed_form(Real x, Real energy, Real t) {
  detail::check_overlap(x);
  detail::check_energy(energy);
  const Complex<Real> global = std::polar(Real(1), -energy * t);
  const Real phase = x * energy * t;
  return {global * std::cos(phase), global * Complex<Real>(0, -std::sin(phase))};
}

/// pi / (2 E x), when H' carries |sigma> onto |w> up to phase.
template <typename Real>
Real fg_arrival_time(Real x, Real energy = Real(1)) {
  detail::check_overlap(x);
  detail::check_energy(energy);
  return std::numbers::pi_v<Real> / (Real(2) * energy * x);
}

// ---------------------------------------------------------------------------
// Commutator Hamiltonian H

template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject commutator(const Eigen::MatrixBase<DerivedA>& a,
                                          const Eigen::MatrixBase<DerivedB>& b) {
  return a * b - b * a;
}

/// 2iEx(|w><sigma| - |sigma><w|)
template <typename Real>
DenseOperator<Real> commutator_hamiltonian(const StateVector<Real>& sigma, Index target,
                                           Real energy = Real(1)) {
  detail::check_energy(energy);
  const auto start = align_start(sigma, target);
  const Complex<Real> coeff(0, Real(2) * energy * start.overlap);
  const Index dim = sigma.size();
  DenseOperator<Real> h = DenseOperator<Real>::Zero(dim, dim);
  h.row(target) = coeff * start.sigma.adjoint();
  h.col(target) -= coeff * start.sigma;
  return h;
}

/// (2i/E)[H_w, H_D] evaluated literally from the two dense operators.
template <typename Real>
DenseOperator<Real> commutator_form(const StateVector<Real>& sigma, Index target,
                                    Real energy = Real(1)) {
  detail::check_energy(energy);
  const auto start = align_start(sigma, target);
  const Index dim = sigma.size();
  DenseOperator<Real> h_w = DenseOperator<Real>::Zero(dim, dim);
  h_w(target, target) = energy;
  const DenseOperator<Real> h_d = energy * ket_bra(start.sigma, start.sigma);
  return Complex<Real>(0, Real(2) / energy) * commutator(h_w, h_d);
}

/// eta = E sin 2theta = 2Ex sin theta
template <typename Real>
Real h_rate(Real x, Real energy = Real(1)) {
  detail::check_overlap(x);
  detail::check_energy(energy);
  return Real(2) * energy * x * std::sqrt(Real(1) - x * x);
}

template <typename Real>
struct PlaneEigenpair {
  Real value{};
  PlaneCoords<Real> vector;
};

/// Plane eigenpairs of H: +eta with (e^{i theta}|sigma> - |w>)/(sqrt2 sin theta),
/// then -eta with (e^{-i theta}|sigma> - |w>)/(sqrt2 sin theta).
template <typename Real>
std::array<PlaneEigenpair<Real>, 2> h_eigensystem(Real x, Real energy = Real(1)) {
  const Real eta = h_rate(x, energy);
  const Real theta = std::acos(x);
  const Real norm = Real(1) / (std::sqrt(Real(2)) * std::sin(theta));
  const Complex<Real> c_w(-norm, 0);
  return {PlaneEigenpair<Real>{eta, {std::polar(norm, theta), c_w}},
          PlaneEigenpair<Real>{-eta, {std::polar(norm, -theta), c_w}}};
}

/// e^{-iHt} on (sigma, w) coordinates:
///   |sigma> -> [sin(theta - eta t)|sigma> + sin(eta t)|w>] / sin theta
///   |w>     -> [-sin(eta t)|sigma> + sin(theta + eta t)|w>] / sin theta
template <typename Real>
PlaneMatrix<Real> h_evolution_closed_form(Real x, Real energy, Real t) {
  const Real eta = h_rate(x, energy);
  const Real theta = std::acos(x);
  const Real s = std::sin(theta);
  const Real a = eta * t;
  PlaneMatrix<Real> m;
  m << std::sin(theta - a) / s, -std::sin(a) / s,
       std::sin(a) / s, std::sin(theta + a) / s;
  return m;
}

/// theta / eta, when H carries |sigma> exactly onto |w>.
template <typename Real>
Real h_arrival_time(Real x, Real energy = Real(1)) {
  return std::acos(x) / h_rate(x, energy);
}

/// t0 = (pi - 2 arccos x) / (2x sqrt(1 - x^2)), the E = 1 time at which e^{-iHt}
/// reproduces one Grover iterate on the plane.
///
/// pi - 2 arccos x is evaluated as 2 arcsin x to avoid cancellation at small
/// x; below x = 1e-6 the two-term series is used.
template <typename Real>
Real grover_time(Real x) {
  detail::check_overlap(x);
  if (x < Real(1e-6)) return Real(1) + Real(2) / Real(3) * x * x;
  return std::asin(x) / (x * std::sqrt(Real(1) - x * x));
}

/// (pi - 2 theta) / eta for general E, i.e. grover_time(x) / E.
template <typename Real>
Real grover_time(Real x, Real energy) {
  detail::check_energy(energy);
  return grover_time(x) / energy;
}

/// 1 + (2/3) x^2
template <typename Real>
Real t0_series(Real x) {
  detail::require(x >= Real(0) && x < Real(1), "t0_series needs 0 <= x < 1");
  return Real(1) + Real(2) / Real(3) * x * x;
}

/// Orthogonal projector onto span{sigma, w}^perp.
template <typename Real>
DenseOperator<Real> plane_projector_complement(const StateVector<Real>& sigma,
                                               Index target) {
  detail::require(target >= 0 && target < sigma.size(), "target index out of range");
  detail::require(is_normalized(sigma, 1e-10), "start state is not normalized");
  const Index dim = sigma.size();
  StateVector<Real> perp = sigma;
  perp(target) = Real(0);
  const Real perp_norm = perp.norm();
  if (perp_norm < Real(kOverlapFloor)) {
    throw DegeneratePlaneError("start state is parallel to the target");
  }
  perp /= perp_norm;
  DenseOperator<Real> p = DenseOperator<Real>::Identity(dim, dim);
  p -= ket_bra(perp, perp);
  p(target, target) -= Real(1);
  return p;
}

// ---------------------------------------------------------------------------
// Naive generator A and the incremental I + eps A stepper

/// A = sqrt(N)(|w><psi| - |psi><w|): +1 along row w, -1 down column w, 0 on
/// the diagonal.
template <typename Real = double>
DenseOperator<Real> naive_generator(const SearchProblem& p) {
  const Index dim = p.dim();
  const Index w = p.target();
  DenseOperator<Real> a = DenseOperator<Real>::Zero(dim, dim);
  a.row(w).setConstant(Real(1));
  a.col(w).setConstant(Real(-1));
  a(w, w) = Real(0);
  return a;
}

/// (I + eps A)|phi>, not renormalized.
template <typename Real>
StateVector<Real> naive_step(const StateVector<Real>& phi, const DenseOperator<Real>& a,
                             Real eps) {
  detail::require(eps >= Real(0), "step size must be non-negative");
  detail::require(a.rows() == phi.size() && a.cols() == phi.size(),
                  "generator dimension does not match the state");
  return phi + eps * (a * phi);
}

template <typename Real>
struct NaiveTrajectory {
  /// |<w|phi_k>| after k renormalized steps, k = 0..max_steps.
  std::vector<Real> amplitudes;
  /// First local maximum of amplitudes.
  std::size_t peak_step = 0;
  Real peak_amplitude{};
};

template <typename Real>
NaiveTrajectory<Real> naive_search(const SearchProblem& p, Real eps, long max_steps) {
  detail::require(eps > Real(0) && eps <= Real(0.1), "step size must lie in (0, 0.1]");
  detail::require(max_steps >= 0, "max_steps must be non-negative");
  const DenseOperator<Real> a = naive_generator<Real>(p);
  StateVector<Real> phi = uniform_state<Real>(p.qubits());

  NaiveTrajectory<Real> out;
  out.amplitudes.reserve(static_cast<std::size_t>(max_steps) + 1);
  out.amplitudes.push_back(std::abs(phi(p.target())));
  for (long k = 0; k < max_steps; ++k) {
    phi = naive_step(phi, a, eps);
    phi.normalize();
    out.amplitudes.push_back(std::abs(phi(p.target())));
  }
  std::size_t k = 0;
  while (k + 1 < out.amplitudes.size() && out.amplitudes[k + 1] > out.amplitudes[k]) ++k;
  out.peak_step = k;
  out.peak_amplitude = out.amplitudes[k];
  return out;
}

// ---------------------------------------------------------------------------
// The whole family for one (sigma, w, E)

template <typename Real = double>
class HamiltonianFamily {
 public:
  HamiltonianFamily(const StateVector<Real>& sigma, Index target, Real energy = Real(1))
      : target_(target), energy_(energy) {
    detail::check_energy(energy);
    auto start = align_start(sigma, target);
    sigma_ = std::move(start.sigma);
    x_ = start.overlap;
    theta_ = std::acos(x_);
    eta_ = h_rate(x_, energy_);
    grover_time_ = qsearch::grover_time(x_, energy_);

    const Index dim = sigma_.size();
    h_w_ = DenseOperator<Real>::Zero(dim, dim);
    h_w_(target_, target_) = energy_;
    h_d_ = energy_ * ket_bra(sigma_, sigma_);
    h_prime_ = h_d_ + h_w_;
    h_ = commutator_hamiltonian(sigma_, target_, energy_);
    generator_ = DenseOperator<Real>::Zero(dim, dim);
    generator_.row(target_) = sigma_.adjoint() / x_;
    generator_.col(target_) -= sigma_ / x_;
    projector_ = plane_projector_complement(sigma_, target_);
    h_tilde_ = h_ + (std::numbers::pi_v<Real> / grover_time_) * projector_;
  }

  Index dim() const { return sigma_.size(); }
  Index target() const { return target_; }
  Real energy() const { return energy_; }
  const StateVector<Real>& sigma() const { return sigma_; }
  Real overlap() const { return x_; }
  Real angle() const { return theta_; }
  Real eta() const { return eta_; }
  /// (pi - 2 theta) / eta; equals grover_time(x) when E = 1.
  Real grover_time() const { return grover_time_; }

  const DenseOperator<Real>& h_w() const { return h_w_; }
  const DenseOperator<Real>& h_d() const { return h_d_; }
  const DenseOperator<Real>& h_prime() const { return h_prime_; }
  const DenseOperator<Real>& h() const { return h_; }
  /// (|w><sigma| - |sigma><w|) / x; sqrt(N)(|w><psi| - |psi><w|) for sigma = psi.
  const DenseOperator<Real>& generator() const { return generator_; }
  const DenseOperator<Real>& projector() const { return projector_; }
  const DenseOperator<Real>& h_tilde() const { return h_tilde_; }

 private:
  Index target_;
  Real energy_;
  StateVector<Real> sigma_;
  Real x_{}, theta_{}, eta_{}, grover_time_{};
  DenseOperator<Real> h_w_, h_d_, h_prime_, h_, generator_, projector_, h_tilde_;
};

/// H + (pi / t0) P, with e^{-i H~ t0} = G on the whole space.
template <typename Real>
const DenseOperator<Real>& augmented_hamiltonian(const HamiltonianFamily<Real>& family) {
  return family.h_tilde();
}

}  // namespace qsearch
