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

// Coordinates in the non-orthogonal basis (|sigma>, |w>) spanned by a start
// state and a computational-basis target.

#include "qsearch/linalg.hpp"

namespace qsearch {

/// 2x2 real action on (sigma, w) coordinates; column j is the image of basis
/// vector j.
template <typename Real>
using PlaneMatrix = Eigen::Matrix<Real, 2, 2>;

/// c_sigma |sigma> + c_w |w>
template <typename Real>
struct PlaneCoords {
  Complex<Real> c_sigma{};
  Complex<Real> c_w{};

  /// Squared norm given the real overlap x = <w|sigma>.
  Real norm_squared(Real x) const {
    return std::norm(c_sigma) + std::norm(c_w) +
           Real(2) * (std::conj(c_sigma) * c_w).real() * x;
  }
};

template <typename Real>
StateVector<Real> lift(const PlaneCoords<Real>& c, const StateVector<Real>& sigma,
                       Index target) {
  detail::require(target >= 0 && target < sigma.size(), "target index out of range");
  StateVector<Real> v = c.c_sigma * sigma;
  v(target) += c.c_w;
  return v;
}

/// Solves the 2x2 Gram system for the plane component of v.
template <typename Real>
PlaneCoords<Real> plane_coordinates(const StateVector<Real>& v,
                                    const StateVector<Real>& sigma, Index target) {
  detail::require(v.size() == sigma.size(), "state dimension mismatch");
  detail::require(target >= 0 && target < sigma.size(), "target index out of range");
  const Complex<Real> g = std::conj(sigma(target));  // <sigma|w>
  const Complex<Real> b_sigma = sigma.dot(v);         // <sigma|v>
  const Complex<Real> b_w = v(target);                // <w|v>
  const Real det = Real(1) - std::norm(g);
  detail::require(det > Real(1e-12), "sigma and w do not span a plane");
  return {(b_sigma - g * b_w) / det, (b_w - std::conj(g) * b_sigma) / det};
}

/// Norm of the component of v orthogonal to span{sigma, w}.
template <typename Real>
Real out_of_plane_norm(const StateVector<Real>& v, const StateVector<Real>& sigma,
                       Index target) {
  return (v - lift(plane_coordinates(v, sigma, target), sigma, target)).norm();
}

}  // namespace qsearch
