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

#include <array>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "qutrit/phase_ops.hpp"
#include "qutrit/quadrature.hpp"
#include "qutrit/state.hpp"

namespace qutrit {

/// Channel visibilities gamma_ij of the covariant phase POVM, each in
/// [0, 1].  gamma = 1 throughout is the symmetric choice that lets the
/// density reach zero.
struct PovmParams {
  double gamma12 = 1.0;
  double gamma23 = 1.0;
  double gamma13 = 1.0;

  PovmParams() = default;
  PovmParams(double g12, double g23, double g13)
      : gamma12(g12), gamma23(g23), gamma13(g13) {
    for (double g : {g12, g23, g13}) {
      if (!(g >= 0.0 && g <= 1.0)) {
        throw InputError("gamma must lie in [0, 1]");
      }
    }
  }

  static PovmParams symmetric(double g) { return PovmParams(g, g, g); }
};

/// A point of the two-phase outcome space, stored reduced to [0, 2 pi).
struct PhasePoint {
  double phi12 = 0.0;
  double phi23 = 0.0;

  PhasePoint() = default;
  PhasePoint(double p12, double p23)
      : phi12(reduce_angle_2pi(p12)), phi23(reduce_angle_2pi(p23)) {}
};

/// POVM element
///   Delta(phi12, phi23) = (2 pi)^-2 { I + [ gamma12 e^{i(2 phi12 - phi23)} |2><1|
///     + gamma23 e^{i(2 phi23 - phi12)} |3><2|
///     + gamma13 e^{i(phi12 + phi23)} |3><1| + h.c. ] }.
inline Matrix3 delta(const PhasePoint& point, const PovmParams& params) {
  const Complex i(0.0, 1.0);
  Matrix3 cross = Matrix3::Zero();
  cross(1, 0) = params.gamma12 * std::exp(i * (2.0 * point.phi12 - point.phi23));
  cross(2, 1) = params.gamma23 * std::exp(i * (2.0 * point.phi23 - point.phi12));
  cross(2, 0) = params.gamma13 * std::exp(i * (point.phi12 + point.phi23));
  const Matrix3 herm = cross + cross.adjoint();
  return (Matrix3::Identity() + herm) / (4.0 * M_PI * M_PI);
}

/// P(phi12, phi23) = Tr(rho Delta); depends on rho only through its
/// off-diagonal entries.
inline double probability_density(const DensityMatrix& rho,
                                  const PhasePoint& point,
                                  const PovmParams& params) {
  return std::real((rho.matrix() * delta(point, params)).trace());
}

/// The normalized vector u with Delta(point) = 3 (2 pi)^-2 |u><u| at
/// gamma = 1:  u = (|1> + e^{i(2 phi12 - phi23)}|2> + e^{i(phi12 + phi23)}|3>)/sqrt(3).
inline PureState phase_state(const PhasePoint& point) {
  const Complex i(0.0, 1.0);
  Eigen::Vector3cd u;
  u[0] = 1.0;
  u[1] = std::exp(i * (2.0 * point.phi12 - point.phi23));
  u[2] = std::exp(i * (point.phi12 + point.phi23));
  return PureState::from_amplitudes(u);
}

struct PovmAxiomReport {
  double hermiticity_deviation;   // max over the grid
  double min_eigenvalue;          // min over the grid
  double normalization_deviation; // || Int Delta - I ||_F
};

/// Checks Hermiticity, positivity and normalization of Delta on a
/// resolution^2 grid of [0, 2 pi)^2.  The equally spaced rule is exact
/// for the normalization integral at any resolution >= 3 since the
/// entries of Delta contain only Fourier modes of order <= 2.
inline PovmAxiomReport verify_povm_axioms(const PovmParams& params,
                                          int grid_resolution) {
  if (grid_resolution < 8) {
    throw InputError("axiom grid resolution must be at least 8");
  }
  const double step = 2.0 * M_PI / grid_resolution;
  PovmAxiomReport report{0.0, std::numeric_limits<double>::infinity(), 0.0};
  Matrix3 total = Matrix3::Zero();
  for (int a = 0; a < grid_resolution; ++a) {
    for (int b = 0; b < grid_resolution; ++b) {
      const Matrix3 d = delta(PhasePoint(a * step, b * step), params);
      report.hermiticity_deviation =
          std::max(report.hermiticity_deviation, (d - d.adjoint()).norm());
      Eigen::SelfAdjointEigenSolver<Matrix3> solver(d, Eigen::EigenvaluesOnly);
      report.min_eigenvalue =
          std::min(report.min_eigenvalue, solver.eigenvalues().minCoeff());
      total += d * (step * step);
    }
  }
  report.normalization_deviation = (total - Matrix3::Identity()).norm();
  return report;
}

/// Largest Frobenius deviation of the covariance identities
///   e^{i 2 p' Sz12} Delta(p12, p23) e^{-i 2 p' Sz12} = Delta(p12 + p', p23)
/// and the Sz23 analog, over the supplied shifts and a fixed set of base
/// points.
inline double verify_covariance(const PovmParams& params,
                                const std::vector<std::pair<double, double>>& shifts) {
  const Complex i(0.0, 1.0);
  constexpr std::array<double, 3> base12 = {0.3, 2.1, 4.4};
  constexpr std::array<double, 3> base23 = {0.9, 3.3, 5.6};
  double worst = 0.0;
  for (const auto& [shift12, shift23] : shifts) {
    Matrix3 u12 = Matrix3::Zero();
    u12(0, 0) = std::exp(-i * shift12);
    u12(1, 1) = std::exp(i * shift12);
    u12(2, 2) = 1.0;
    Matrix3 u23 = Matrix3::Zero();
    u23(0, 0) = 1.0;
    u23(1, 1) = std::exp(-i * shift23);
    u23(2, 2) = std::exp(i * shift23);
    for (double p12 : base12) {
      for (double p23 : base23) {
        const Matrix3 d = delta(PhasePoint(p12, p23), params);
        const Matrix3 shifted12 = delta(PhasePoint(p12 + shift12, p23), params);
        const Matrix3 shifted23 = delta(PhasePoint(p12, p23 + shift23), params);
        worst = std::max(worst, (u12 * d * u12.adjoint() - shifted12).norm());
        worst = std::max(worst, (u23 * d * u23.adjoint() - shifted23).norm());
      }
    }
  }
  return worst;
}

/// One measured density value.
struct PhaseSample {
  PhasePoint point;
  double density = 0.0;
};

struct OffDiagonals {
  Complex rho12;
  Complex rho23;
  Complex rho13;
  double condition_number;
};

/// Six phase points at which the density determines the state's
/// off-diagonal entries; chosen so the 6x6 design is well conditioned.
inline std::array<PhasePoint, 6> default_reconstruction_points() {
  return {PhasePoint(0, 0),          PhasePoint(M_PI / 2, 0),
          PhasePoint(0, M_PI / 2),   PhasePoint(M_PI, 0),
          PhasePoint(0, M_PI),       PhasePoint(M_PI / 2, M_PI / 2)};
}

/// Linear inversion of six density samples (taken at gamma = 1) for the
/// three complex off-diagonals of rho.  Throws SingularDesign when the
/// sample points give a design matrix with condition number above 1e8.
inline OffDiagonals reconstruct_offdiagonals(const std::array<PhaseSample, 6>& samples) {
  Eigen::Matrix<double, 6, 6> design;
  Eigen::Matrix<double, 6, 1> rhs;
  for (int k = 0; k < 6; ++k) {
    const double p12 = samples[k].point.phi12;
    const double p23 = samples[k].point.phi23;
    const double a = 2.0 * p12 - p23;
    const double b = 2.0 * p23 - p12;
    const double c = p12 + p23;
    design(k, 0) = 2.0 * std::cos(a);
    design(k, 1) = -2.0 * std::sin(a);
    design(k, 2) = 2.0 * std::cos(b);
    design(k, 3) = -2.0 * std::sin(b);
    design(k, 4) = 2.0 * std::cos(c);
    design(k, 5) = -2.0 * std::sin(c);
    rhs(k) = samples[k].density * 4.0 * M_PI * M_PI - 1.0;
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> svd(
      design, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  const double condition = smin > 0 ? smax / smin
                                    : std::numeric_limits<double>::infinity();
  if (!(condition < 1e8)) {
    throw SingularDesign("reconstruction design matrix is ill-conditioned");
  }
  const Eigen::Matrix<double, 6, 1> x = svd.solve(rhs);
  return {Complex(x[0], x[1]), Complex(x[2], x[3]), Complex(x[4], x[5]),
          condition};
}

/// Sampled probability density on a resolution^2 grid of [0, 2 pi)^2,
/// left-endpoint convention, row-major with phi12 as the outer index.
struct PhaseGrid {
  int resolution = 0;
  std::vector<double> values;  // size resolution^2, units 1/rad^2

  double value_at(int i12, int i23) const {
    return values[static_cast<std::size_t>(i12) * resolution + i23];
  }
};

inline PhaseGrid phase_distribution(const DensityMatrix& rho,
                                    const PovmParams& params, int resolution) {
  if (resolution < 1) throw InputError("grid resolution must be positive");
  PhaseGrid grid;
  grid.resolution = resolution;
  grid.values.resize(static_cast<std::size_t>(resolution) * resolution);
  const double step = 2.0 * M_PI / resolution;
  for (int a = 0; a < resolution; ++a) {
    for (int b = 0; b < resolution; ++b) {
      grid.values[static_cast<std::size_t>(a) * resolution + b] =
          probability_density(rho, PhasePoint(a * step, b * step), params);
    }
  }
  return grid;
}

/// Riemann sum times the cell area; 1 for a valid density.
inline double grid_probability_sum(const PhaseGrid& grid) {
  const double cell = std::pow(2.0 * M_PI / grid.resolution, 2);
  return pairwise_sum(grid.values) * cell;
}

}  // namespace qutrit
