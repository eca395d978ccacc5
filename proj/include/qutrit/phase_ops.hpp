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
#include <array>
#include <map>
#include <string>
#include <utility>

#include "qutrit/algebra.hpp"
#include "qutrit/state.hpp"

namespace qutrit {

/// The two-level channels of a qutrit.
enum class LevelPair { p12, p23, p13 };

inline std::pair<int, int> levels_of(LevelPair pair) {
  switch (pair) {
    case LevelPair::p12: return {1, 2};
    case LevelPair::p23: return {2, 3};
    case LevelPair::p13: return {1, 3};
  }
  throw BadLevelPair("unknown level pair");
}

/// The basis level left untouched by the channel.
inline int spectator_of(LevelPair pair) {
  switch (pair) {
    case LevelPair::p12: return 3;
    case LevelPair::p23: return 1;
    case LevelPair::p13: return 2;
  }
  throw BadLevelPair("unknown level pair");
}

inline std::string pair_name(LevelPair pair) {
  const auto [i, j] = levels_of(pair);
  return std::to_string(i) + std::to_string(j);
}

/// Transition operator |i><j|.
struct TransitionOperator {
  int i;
  int j;
  Matrix3 matrix;
};

inline TransitionOperator transition(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) {
    throw BadLevel("transition levels must be in {1, 2, 3}");
  }
  Matrix3 m = Matrix3::Zero();
  m(i - 1, j - 1) = 1;
  return {i, j, m};
}

/// Population inversion of a channel: S^z_12 = (S_22 - S_11)/2 or
/// S^z_23 = (S_33 - S_22)/2.  Only the 1-2 and 2-3 channels carry an
/// independent inversion.
inline Matrix3 inversion(LevelPair pair) {
  switch (pair) {
    case LevelPair::p12:
      return 0.5 * (transition(2, 2).matrix - transition(1, 1).matrix);
    case LevelPair::p23:
      return 0.5 * (transition(3, 3).matrix - transition(2, 2).matrix);
    default:
      throw BadLevelPair("inversion is defined for pairs 12 and 23 only");
  }
}

struct PhaseEigenpair {
  Complex eigenvalue;    // unit modulus
  double phase;          // principal argument, in (-pi, pi]
  PureState eigenvector; // canonical gauge
};

/// Unitary phase operator of a channel with its eigensystem, sorted by
/// phase value in descending order.
struct PhaseOperator {
  LevelPair pair;
  Matrix3 matrix;
  std::array<PhaseEigenpair, 3> eigensystem;
};

namespace detail {

inline Matrix3 canonical_phase_matrix(LevelPair pair) {
  const auto [i, j] = levels_of(pair);
  const int k = spectator_of(pair);
  return transition(i, j).matrix - transition(j, i).matrix +
         transition(k, k).matrix;
}

}  // namespace detail

/// The canonical unitary phase operators
///   E_12 = |1><2| - |2><1| + |3><3|,
///   E_23 = |2><3| - |3><2| + |1><1|,
///   E_13 = |1><3| - |3><1| + |2><2|.
/// Each leaves its spectator level invariant and has eigenphases
/// {pi/2, 0, -pi/2}.
inline PhaseOperator phase_operator(LevelPair pair) {
  const Matrix3 matrix = detail::canonical_phase_matrix(pair);
  Eigen::ComplexEigenSolver<Matrix3> solver(matrix);
  std::array<PhaseEigenpair, 3> pairs = {
      PhaseEigenpair{0.0, 0.0, basis_state(1)},
      PhaseEigenpair{0.0, 0.0, basis_state(1)},
      PhaseEigenpair{0.0, 0.0, basis_state(1)},
  };
  for (int k = 0; k < 3; ++k) {
    Complex value = solver.eigenvalues()[k];
    value /= std::abs(value);
    pairs[k].eigenvalue = value;
    pairs[k].phase = std::atan2(value.imag(), value.real());
    pairs[k].eigenvector =
        PureState::from_amplitudes(solver.eigenvectors().col(k));
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const PhaseEigenpair& a, const PhaseEigenpair& b) {
              return a.phase > b.phase;
            });
  return PhaseOperator{pair, matrix, pairs};
}

struct PolarDecomposition {
  Matrix3 modulus;      // R = sqrt(S_ij S_ji), positive semidefinite
  PhaseOperator phase;  // unitary E with R E = S_ij
};

/// Polar decomposition S_ij = R E of the channel's transition operator.
inline PolarDecomposition polar_decompose(LevelPair pair) {
  const auto [i, j] = levels_of(pair);
  const Matrix3 s_ij = transition(i, j).matrix;
  const Matrix3 s_ji = transition(j, i).matrix;
  Eigen::SelfAdjointEigenSolver<Matrix3> solver(s_ij * s_ji);
  return {solver.operatorSqrt(), phase_operator(pair)};
}

/// General unitary solution for the 1-3 channel,
///   a|3><2| - b*|3><1| + b|2><2| + a*|2><1| + |1><3|,
/// parameterized by |a|^2 + |b|^2 = 1.  At (a, b) = (0, 1) level |2> is a
/// spectator and the canonical E_13 is recovered.
inline Matrix3 general_e13(Complex a, Complex b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
    throw NotNormalized("general_e13 requires |a|^2 + |b|^2 = 1");
  }
  Matrix3 m = Matrix3::Zero();
  m(2, 1) = a;
  m(2, 0) = -std::conj(b);
  m(1, 1) = b;
  m(1, 0) = std::conj(a);
  m(0, 2) = 1;
  return m;
}

struct NoncommutativityReport {
  /// Frobenius norm of E_12 E_23 - E_13; strictly positive.
  double phase_product_deviation;
  /// Frobenius norms of the channel commutators.
  std::map<std::string, double> commutator_norms;
};

/// Quantifies which channel operators commute.  The moduli used here are
/// R_12 = sqrt(S_12 S_21), the modulus of S_12 = R_12 E_12, and
/// R_23 = sqrt(S_32 S_23), the modulus of S_23 = E_23 R_23 (for the 2-3
/// channel the modulus sits on the right; it is the projector onto the
/// 1-2 channel's spectator level).  With these, every modulus commutes
/// with the other channel's phase and with the other modulus, while
/// [E_12, E_23] != 0: channel interference is carried entirely by the
/// phases.
inline NoncommutativityReport check_noncommutativity() {
  const Matrix3 e12 = phase_operator(LevelPair::p12).matrix;
  const Matrix3 e23 = phase_operator(LevelPair::p23).matrix;
  const Matrix3 e13 = phase_operator(LevelPair::p13).matrix;

  const Matrix3 s12 = transition(1, 2).matrix;
  const Matrix3 s21 = transition(2, 1).matrix;
  const Matrix3 s23 = transition(2, 3).matrix;
  const Matrix3 s32 = transition(3, 2).matrix;
  const Matrix3 r12 =
      Eigen::SelfAdjointEigenSolver<Matrix3>(s12 * s21).operatorSqrt();
  const Matrix3 r23 =
      Eigen::SelfAdjointEigenSolver<Matrix3>(s32 * s23).operatorSqrt();

  const auto comm = [](const Matrix3& a, const Matrix3& b) {
    return (a * b - b * a).norm();
  };

  NoncommutativityReport report;
  report.phase_product_deviation = (e12 * e23 - e13).norm();
  report.commutator_norms["[E12,R23]"] = comm(e12, r23);
  report.commutator_norms["[E23,R12]"] = comm(e23, r12);
  report.commutator_norms["[R23,R12]"] = comm(r23, r12);
  report.commutator_norms["[E12,E23]"] = comm(e12, e23);
  return report;
}

}  // namespace qutrit
