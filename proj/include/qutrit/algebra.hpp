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

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "qutrit/errors.hpp"

namespace qutrit {

using Complex = std::complex<double>;

/// 3x3 complex matrix, the carrier for all single-qutrit operators.
using Matrix3 = Eigen::Matrix3cd;

/// Real 8-vector over the su(3) generator basis.
using Vec8 = Eigen::Matrix<double, 8, 1>;

/// Tolerance for the algebraic identities of this module.
inline constexpr double kAlgebraTol = 1e-12;

inline bool is_hermitian(const Matrix3& m, double tol = kAlgebraTol) {
  return (m - m.adjoint()).norm() <= tol;
}

inline bool is_unitary(const Matrix3& m, double tol = kAlgebraTol) {
  return (m.adjoint() * m - Matrix3::Identity()).norm() <= tol;
}

/// The eight Gell-Mann matrices in standard order.
///
/// Hermitian, traceless, normalized so that Tr(l_r l_s) = 2 delta_rs.
/// Row/column 1,2,3 correspond to the basis kets |1>, |2>, |3>.
inline const std::array<Matrix3, 8>& gellmann_matrices() {
  static const std::array<Matrix3, 8> basis = [] {
    const Complex i(0.0, 1.0);
    const double s3 = std::sqrt(3.0);
    std::array<Matrix3, 8> l;
    for (auto& m : l) m.setZero();
    l[0](0, 1) = 1;
    l[0](1, 0) = 1;
    l[1](0, 1) = -i;
    l[1](1, 0) = i;
    l[2](0, 0) = 1;
    l[2](1, 1) = -1;
    l[3](0, 2) = 1;
    l[3](2, 0) = 1;
    l[4](0, 2) = -i;
    l[4](2, 0) = i;
    l[5](1, 2) = 1;
    l[5](2, 1) = 1;
    l[6](1, 2) = -i;
    l[6](2, 1) = i;
    l[7](0, 0) = 1.0 / s3;
    l[7](1, 1) = 1.0 / s3;
    l[7](2, 2) = -2.0 / s3;
    return l;
  }();
  return basis;
}

/// Antisymmetric (f) and symmetric (d) structure constants of su(3),
/// stored as dense 8x8x8 tensors.
struct StructureTensors {
  std::array<double, 512> f{};
  std::array<double, 512> d{};

  static constexpr int flat(int r, int s, int t) {  // 0-based
    return (r * 8 + s) * 8 + t;
  }

  /// 1-based accessors matching the conventional index labels.
  double f_at(int r, int s, int t) const { return f[flat(r - 1, s - 1, t - 1)]; }
  double d_at(int r, int s, int t) const { return d[flat(r - 1, s - 1, t - 1)]; }
};

/// Derives f and d from a trace-orthonormal Hermitian basis via
///   f_rst = Im Tr([l_r, l_s] l_t) / 4,
///   d_rst = Re Tr({l_r, l_s} l_t) / 4.
///
/// Throws NonOrthogonalBasis unless Tr(l_r l_s) = 2 delta_rs holds to
/// kAlgebraTol.
inline StructureTensors derive_structure_tensors(const std::array<Matrix3, 8>& basis) {
  for (int r = 0; r < 8; ++r) {
    for (int s = 0; s < 8; ++s) {
      const Complex tr = (basis[r] * basis[s]).trace();
      const double expected = r == s ? 2.0 : 0.0;
      if (std::abs(tr - expected) > kAlgebraTol) {
        throw NonOrthogonalBasis("Tr(l_" + std::to_string(r + 1) + " l_" +
                                 std::to_string(s + 1) +
                                 ") deviates from 2 delta_rs");
      }
    }
  }
  StructureTensors tensors;
  for (int r = 0; r < 8; ++r) {
    for (int s = 0; s < 8; ++s) {
      const Matrix3 comm = basis[r] * basis[s] - basis[s] * basis[r];
      const Matrix3 anti = basis[r] * basis[s] + basis[s] * basis[r];
      for (int t = 0; t < 8; ++t) {
        tensors.f[StructureTensors::flat(r, s, t)] =
            std::imag((comm * basis[t]).trace()) / 4.0;
        tensors.d[StructureTensors::flat(r, s, t)] =
            std::real((anti * basis[t]).trace()) / 4.0;
      }
    }
  }
  return tensors;
}

/// Structure constants of the standard Gell-Mann basis, derived once and
/// cached.
inline const StructureTensors& su3_structure() {
  static const StructureTensors tensors =
      derive_structure_tensors(gellmann_matrices());
  return tensors;
}

/// Antisymmetric product (A ^ B)_r = f_rst A_s B_t.
inline Vec8 wedge(const Vec8& a, const Vec8& b,
                  const StructureTensors& tensors = su3_structure()) {
  Vec8 out = Vec8::Zero();
  for (int r = 0; r < 8; ++r) {
    double acc = 0;
    for (int s = 0; s < 8; ++s) {
      for (int t = 0; t < 8; ++t) {
        acc += tensors.f[StructureTensors::flat(r, s, t)] * a[s] * b[t];
      }
    }
    out[r] = acc;
  }
  return out;
}

/// Symmetric product (A * B)_r = sqrt(3) d_rst A_s B_t.
inline Vec8 star(const Vec8& a, const Vec8& b,
                 const StructureTensors& tensors = su3_structure()) {
  const double s3 = std::sqrt(3.0);
  Vec8 out = Vec8::Zero();
  for (int r = 0; r < 8; ++r) {
    double acc = 0;
    for (int s = 0; s < 8; ++s) {
      for (int t = 0; t < 8; ++t) {
        acc += tensors.d[StructureTensors::flat(r, s, t)] * a[s] * b[t];
      }
    }
    out[r] = s3 * acc;
  }
  return out;
}

}  // namespace qutrit
