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

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qsearch {

using Index = Eigen::Index;

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using StateVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

/// Dense N x N operator, row-major.
template <typename Real>
using DenseOperator =
    Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

inline constexpr int kMaxStateQubits = 20;
inline constexpr int kMaxOperatorQubits = 12;

/// Entrywise tolerance for the hermitian / skew-hermitian / unitary predicates.
inline constexpr double kPredicateTolerance = 1e-10;

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

inline Index dimension_for(int qubits, int max_qubits) {
  require(qubits >= 1 && qubits <= max_qubits,
          "qubit count must be in [1, " + std::to_string(max_qubits) +
              "], got " + std::to_string(qubits));
  return Index{1} << qubits;
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a) {
  require(a.rows() > 0 && a.rows() == a.cols(),
          "operator must be square and non-empty, got " +
              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& a) {
  require(a.allFinite(), "operator has non-finite entries");
}

// ||A||_2 <= sqrt(||A||_1 * ||A||_inf)
template <typename Derived>
typename Derived::RealScalar spectral_norm_bound(
    const Eigen::MatrixBase<Derived>& a) {
  using std::sqrt;
  const auto abs = a.cwiseAbs().eval();
  return sqrt(abs.colwise().sum().maxCoeff() * abs.rowwise().sum().maxCoeff());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// States

template <typename Real = double>
StateVector<Real> basis_state(Index dim, Index index) {
  detail::require(dim > 0, "dimension must be positive");
  detail::require(index >= 0 && index < dim,
                  "basis index " + std::to_string(index) +
                      " outside [0, " + std::to_string(dim) + ")");
  StateVector<Real> v = StateVector<Real>::Zero(dim);
  v(index) = Real(1);
  return v;
}

/// Equal superposition 2^{-n/2} sum_i |i> over n qubits.
template <typename Real = double>
StateVector<Real> uniform_state(int qubits) {
  const Index dim = detail::dimension_for(qubits, kMaxStateQubits);
  using std::sqrt;
  return StateVector<Real>::Constant(dim, Complex<Real>(Real(1) / sqrt(Real(dim))));
}

template <typename Derived>
bool is_normalized(const Eigen::MatrixBase<Derived>& v, double tol = 1e-12) {
  using std::abs;
  return abs(v.squaredNorm() - 1) <= tol;
}

/// |a><b|
template <typename DerivedA, typename DerivedB>
auto ket_bra(const Eigen::MatrixBase<DerivedA>& a,
             const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  using Plain = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Plain out = a * b.adjoint();
  return out;
}

// ---------------------------------------------------------------------------
// Operator predicates

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a,
                  double tol = kPredicateTolerance) {
  if (a.rows() == 0 || a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

template <typename Derived>
bool is_skew_hermitian(const Eigen::MatrixBase<Derived>& a,
                       double tol = kPredicateTolerance) {
  if (a.rows() == 0 || a.rows() != a.cols()) return false;
  return (a + a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& a,
                double tol = kPredicateTolerance) {
  if (a.rows() == 0 || a.rows() != a.cols()) return false;
  using Plain = typename Derived::PlainObject;
  const Plain gram = a.adjoint() * a;
  return (gram - Plain::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff() <= tol;
}

// ---------------------------------------------------------------------------
// Norm

/// sup_{|v|=1} |Av|, the largest singular value.
template <typename Derived>
typename Derived::RealScalar operator_norm(const Eigen::MatrixBase<Derived>& a) {
  detail::require(a.size() > 0, "operator_norm of an empty operator");
  detail::require_finite(a);
  using Scalar = typename Derived::Scalar;
  using ColMajor = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::BDCSVD<ColMajor> svd(ColMajor(a), 0);
  return svd.singularValues()(0);
}

// ---------------------------------------------------------------------------
// Exponentials

/// e^A from the power series sum_k A^k / k!, with scaling and squaring.
///
/// A is scaled by 2^-s so that a bound on its spectral norm is at most 1/2,
/// the series is summed until a term bound falls below 1e-16, and the result
/// is squared s times.
template <typename Derived>
typename Derived::PlainObject matrix_exponential(const Eigen::MatrixBase<Derived>& a) {
  detail::require_square(a);
  detail::require_finite(a);
  using Plain = typename Derived::PlainObject;
  using Real = typename Derived::RealScalar;
  constexpr int kMaxTerms = 64;

  const Index n = a.rows();
  const Real bound = detail::spectral_norm_bound(a);
  int squarings = 0;
  if (bound > Real(0.5)) {
    squarings = static_cast<int>(std::ceil(std::log2(bound / Real(0.5))));
  }
  const Plain scaled = a * std::ldexp(Real(1), -squarings);

  Plain result = Plain::Identity(n, n);
  Plain term = Plain::Identity(n, n);
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = (term * scaled).eval() / Real(k);
    result += term;
    if (detail::spectral_norm_bound(term) < Real(1e-16)) break;
  }
  for (int i = 0; i < squarings; ++i) result = (result * result).eval();
  return result;
}

/// Eigendecomposition of a hermitian generator, reusable for many times t.
template <typename Real>
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const DenseOperator<Real>& hamiltonian) {
    detail::require_square(hamiltonian);
    detail::require_finite(hamiltonian);
    detail::require(is_hermitian(hamiltonian),
                    "spectral propagator needs a hermitian generator");
    using ColMajor = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::SelfAdjointEigenSolver<ColMajor> solver{ColMajor(hamiltonian)};
    detail::require(solver.info() == Eigen::Success, "eigensolver failed to converge");
    values_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
  }

  Index dim() const { return values_.size(); }
  const RealVector<Real>& eigenvalues() const { return values_; }
  const DenseOperator<Real>& eigenvectors() const { return vectors_; }

  /// e^{-iHt}
  DenseOperator<Real> operator()(Real t) const {
    const StateVector<Real> phases = this->phases(t);
    DenseOperator<Real> scaled = vectors_ * phases.asDiagonal();
    return scaled * vectors_.adjoint();
  }

  /// e^{-iHt} v
  StateVector<Real> apply(Real t, const StateVector<Real>& v) const {
    detail::require(v.size() == dim(), "state dimension mismatch");
    StateVector<Real> coeffs = vectors_.adjoint() * v;
    coeffs = coeffs.cwiseProduct(phases(t));
    return vectors_ * coeffs;
  }

 private:
  StateVector<Real> phases(Real t) const {
    StateVector<Real> p(values_.size());
    for (Index i = 0; i < values_.size(); ++i) {
      p(i) = std::polar(Real(1), -values_(i) * t);
    }
    return p;
  }

  RealVector<Real> values_;
  DenseOperator<Real> vectors_;
};

/// e^{-iHt} for hermitian H via its eigendecomposition.
template <typename Real>
DenseOperator<Real> hermitian_exponential(const DenseOperator<Real>& hamiltonian, Real t) {
  return SpectralPropagator<Real>(hamiltonian)(t);
}

/// e^A for skew-hermitian A via the eigendecomposition of the hermitian iA.
template <typename Real>
DenseOperator<Real> skew_hermitian_exponential(const DenseOperator<Real>& a) {
  detail::require(is_skew_hermitian(a), "generator is not skew-hermitian");
  const DenseOperator<Real> h = Complex<Real>(0, 1) * a;
  return hermitian_exponential<Real>(h, Real(1));
}

/// e^A v without forming e^A: the Taylor series applied to v over enough
/// substeps that each substep's generator has norm bound at most 1/2.
template <typename Real>
StateVector<Real> exponential_action(const DenseOperator<Real>& a,
                                     const StateVector<Real>& v) {
  detail::require_square(a);
  detail::require_finite(a);
  detail::require(v.size() == a.rows(), "state dimension mismatch");
  constexpr int kMaxTerms = 64;
  const Real bound = detail::spectral_norm_bound(a);
  const long steps = std::max(1L, static_cast<long>(std::ceil(bound / Real(0.5))));
  const Real inv_steps = Real(1) / Real(steps);

  StateVector<Real> x = v;
  for (long s = 0; s < steps; ++s) {
    StateVector<Real> term = x;
    StateVector<Real> acc = x;
    for (int k = 1; k <= kMaxTerms; ++k) {
      term = (a * term) * (inv_steps / Real(k));
      acc += term;
      if (term.norm() < Real(1e-16) * acc.norm()) break;
    }
    x = acc;
  }
  return x;
}

/// (I + A/k)^k, the product-limit approximation of e^A.
template <typename Derived>
typename Derived::PlainObject power_limit_approx(const Eigen::MatrixBase<Derived>& a,
                                                 long long k) {
  detail::require(k >= 1, "power_limit_approx needs k >= 1");
  detail::require_square(a);
  using Plain = typename Derived::PlainObject;
  using Real = typename Derived::RealScalar;
  const Index n = a.rows();
  Plain base = Plain::Identity(n, n) + a / Real(k);
  Plain result = Plain::Identity(n, n);
  for (long long e = k; e > 0; e >>= 1) {
    if (e & 1) result = (result * base).eval();
    if (e > 1) base = (base * base).eval();
  }
  return result;
}

/// Haar-like random unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal folded back into Q.
template <typename Real = double>
DenseOperator<Real> random_unitary(Index dim, std::uint64_t seed) {
  detail::require(dim > 0, "dimension must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<Real> normal;
  using ColMajor = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
  ColMajor z(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) z(i, j) = Complex<Real>(normal(rng), normal(rng));
  }
  const Eigen::HouseholderQR<ColMajor> qr(z);
  ColMajor q = qr.householderQ() * ColMajor::Identity(dim, dim);
  const ColMajor r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const Complex<Real> d = r(j, j);
    if (std::abs(d) > Real(0)) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace qsearch
