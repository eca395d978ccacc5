// Copyright 2026 The qutrit-phases Authors
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

#include <algorithm>
#include <cmath>

#include "qutrit/algebra.hpp"
#include "qutrit/errors.hpp"

namespace qutrit {

/// Angle chart (xi, theta, phi12, phi13) for pure qutrit states:
///   |psi> = sin(xi/2)cos(theta/2)|1> + e^{i phi12} sin(xi/2)sin(theta/2)|2>
///           + e^{i phi13} cos(xi/2)|3>.
struct StateAngles {
  double xi;
  double theta;
  double phi12;
  double phi13;
};

inline double reduce_angle_2pi(double phi) {
  const double two_pi = 2.0 * M_PI;
  double r = std::fmod(phi, two_pi);
  if (r < 0) r += two_pi;
  if (r >= two_pi) r = 0;  // guard against fmod rounding at the boundary
  return r;
}

/// Normalized pure qutrit state in the canonical gauge: the first
/// amplitude of magnitude above 1e-12 (in basis order |1>,|2>,|3>) is
/// real and non-negative.
class PureState {
 public:
  static constexpr double kGaugeTol = 1e-12;

  /// Normalizes and gauges; throws NotAState for a (numerically) zero
  /// vector.
  static PureState from_amplitudes(const Eigen::Vector3cd& amplitudes) {
    const double nrm = amplitudes.norm();
    if (!(nrm > kGaugeTol) || !std::isfinite(nrm)) {
      throw NotAState("amplitude vector has zero or non-finite norm");
    }
    Eigen::Vector3cd c = amplitudes / nrm;
    int k = 0;
    while (k < 2 && std::abs(c[k]) <= kGaugeTol) ++k;
    c *= std::conj(c[k]) / std::abs(c[k]);
    c[k] = std::abs(c[k]);  // scrub the residual imaginary dust
    return PureState(c);
  }

  static PureState from_angles(double xi, double theta, double phi12,
                               double phi13) {
    const Complex i(0.0, 1.0);
    Eigen::Vector3cd c;
    c[0] = std::sin(xi / 2) * std::cos(theta / 2);
    c[1] = std::exp(i * phi12) * std::sin(xi / 2) * std::sin(theta / 2);
    c[2] = std::exp(i * phi13) * std::cos(xi / 2);
    return from_amplitudes(c);
  }

  const Eigen::Vector3cd& amplitudes() const { return amps_; }

  /// 1-based component accessor.
  Complex amplitude(int level) const {
    if (level < 1 || level > 3) throw BadLevel("level must be 1, 2 or 3");
    return amps_[level - 1];
  }

  Matrix3 projector() const { return amps_ * amps_.adjoint(); }

  /// Inverts the angle chart.  Magnitudes fix xi and theta; phases are
  /// read relative to the gauge amplitude, with phi = 0 by convention
  /// wherever the corresponding amplitude vanishes.
  StateAngles angles() const {
    const double m1 = std::abs(amps_[0]);
    const double m2 = std::abs(amps_[1]);
    const double m3 = std::abs(amps_[2]);
    StateAngles a{};
    a.xi = 2.0 * std::acos(std::clamp(m3, 0.0, 1.0));
    a.theta = (m1 > kGaugeTol || m2 > kGaugeTol) ? 2.0 * std::atan2(m2, m1) : 0.0;
    a.phi12 = m2 > kGaugeTol ? reduce_angle_2pi(std::arg(amps_[1])) : 0.0;
    a.phi13 = m3 > kGaugeTol ? reduce_angle_2pi(std::arg(amps_[2])) : 0.0;
    return a;
  }

 private:
  explicit PureState(Eigen::Vector3cd gauged) : amps_(std::move(gauged)) {}
  Eigen::Vector3cd amps_;
};

/// <a|b>
inline Complex inner(const PureState& a, const PureState& b) {
  return a.amplitudes().dot(b.amplitudes());
}

inline PureState basis_state(int level) {
  Eigen::Vector3cd c = Eigen::Vector3cd::Zero();
  if (level < 1 || level > 3) throw BadLevel("level must be 1, 2 or 3");
  c[level - 1] = 1;
  return PureState::from_amplitudes(c);
}

/// Validated qutrit density matrix: Hermitian and unit trace to 1e-12,
/// smallest eigenvalue >= -1e-10.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kEigenvalueFloor = -1e-10;

  explicit DensityMatrix(const Matrix3& rho) : rho_(rho) {
    if ((rho - rho.adjoint()).norm() > kHermitianTol) {
      throw NotAState("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1.0)) > kTraceTol) {
      throw NotAState("density matrix trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix3> solver(rho,
                                                  Eigen::EigenvaluesOnly);
    min_eigenvalue_ = solver.eigenvalues().minCoeff();
    if (min_eigenvalue_ < kEigenvalueFloor) {
      throw NotAState("density matrix has a negative eigenvalue");
    }
  }

  static DensityMatrix pure(const PureState& psi) {
    return DensityMatrix(psi.projector());
  }

  static DensityMatrix maximally_mixed() {
    return DensityMatrix(Matrix3::Identity() / 3.0);
  }

  const Matrix3& matrix() const { return rho_; }

  /// 1-based entry <i|rho|j>.
  Complex entry(int i, int j) const {
    if (i < 1 || i > 3 || j < 1 || j > 3) {
      throw BadLevel("level must be 1, 2 or 3");
    }
    return rho_(i - 1, j - 1);
  }

  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  Matrix3 rho_;
  double min_eigenvalue_;
};

/// Generalized Poincare (Bloch) vector of a qutrit.
struct Bloch8 {
  Vec8 n = Vec8::Zero();
};

/// n_r = (sqrt(3)/2) Tr(rho l_r).
inline Bloch8 bloch_from_density(const DensityMatrix& rho) {
  const auto& basis = gellmann_matrices();
  Bloch8 out;
  const double scale = std::sqrt(3.0) / 2.0;
  for (int r = 0; r < 8; ++r) {
    out.n[r] = scale * std::real((rho.matrix() * basis[r]).trace());
  }
  return out;
}

inline Bloch8 bloch_from_pure(const PureState& psi) {
  return bloch_from_density(DensityMatrix::pure(psi));
}

/// rho = (1/3)(I + sqrt(3) n . l).  The unit ball is necessary but not
/// sufficient in dimension 3, so positivity is checked by eigenvalue;
/// throws NotAState for vectors outside the state space.
inline DensityMatrix density_from_bloch(const Bloch8& bloch) {
  const auto& basis = gellmann_matrices();
  Matrix3 rho = Matrix3::Identity();
  const double s3 = std::sqrt(3.0);
  for (int r = 0; r < 8; ++r) rho += s3 * bloch.n[r] * basis[r];
  rho /= 3.0;
  return DensityMatrix(rho);
}

/// Pure-state test on the Bloch vector: |n.n - 1| <= tol and
/// n*n = n componentwise to tol.
inline bool is_pure_bloch(const Bloch8& bloch, double tol) {
  if (std::abs(bloch.n.dot(bloch.n) - 1.0) > tol) return false;
  const Vec8 residual = star(bloch.n, bloch.n) - bloch.n;
  return residual.cwiseAbs().maxCoeff() <= tol;
}

/// Angle arccos(n1 . n2) between two pure-state Bloch vectors; lies in
/// [0, 2 pi / 3].  Throws NotPure unless both vectors pass
/// is_pure_bloch at 1e-8.
inline double opening_angle(const Bloch8& a, const Bloch8& b) {
  constexpr double kPurityTol = 1e-8;
  if (!is_pure_bloch(a, kPurityTol) || !is_pure_bloch(b, kPurityTol)) {
    throw NotPure("opening_angle requires pure-state Bloch vectors");
  }
  const double dot = std::clamp(a.n.dot(b.n), -1.0, 1.0);
  return std::acos(dot);
}

}  // namespace qutrit
