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
#include <complex>
#include <stdexcept>

#include "qutrit/algebra.hpp"
#include "qutrit/povm.hpp"
#include "qutrit/quadrature.hpp"

namespace qutrit {

/// Coefficient vector over the symmetric subspace of N qutrits.  Basis
/// kets are |n1, n2, n3> with n1 + n2 + n3 = N, indexed by (n, m) with
/// 0 <= n <= m <= N and occupations (n, m - n, N - m).
class SymmetricFockState {
 public:
  explicit SymmetricFockState(int num_qutrits)
      : num_qutrits_(num_qutrits),
        coeffs_(Eigen::VectorXcd::Zero(dimension(num_qutrits))) {
    if (num_qutrits < 1) {
      throw std::invalid_argument("need at least one qutrit");
    }
  }

  static int dimension(int num_qutrits) {
    return (num_qutrits + 1) * (num_qutrits + 2) / 2;
  }

  static int index_of(int n, int m) { return m * (m + 1) / 2 + n; }

  int num_qutrits() const { return num_qutrits_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }

  Complex& coeff(int n, int m) { return coeffs_[index_of(n, m)]; }
  Complex coeff(int n, int m) const { return coeffs_[index_of(n, m)]; }

  const Eigen::VectorXcd& coefficients() const { return coeffs_; }
  Eigen::VectorXcd& coefficients() { return coeffs_; }

  double norm() const { return coeffs_.norm(); }

 private:
  int num_qutrits_;
  Eigen::VectorXcd coeffs_;
};

/// <a|b>; throws MismatchedN for states of different qutrit number.
inline Complex inner(const SymmetricFockState& a, const SymmetricFockState& b) {
  if (a.num_qutrits() != b.num_qutrits()) {
    throw MismatchedN("states live on different qutrit numbers");
  }
  return a.coefficients().dot(b.coefficients());
}

/// Matrix of the collective operator S_ij on the symmetric Fock basis:
///   S_ij |..n_i..n_j..> = sqrt(n_j (n_i + 1)) |..n_i+1..n_j-1..>  (i != j)
///   S_ii |..n_i..>      = n_i |..n_i..>.
/// At N = 1 these reduce to the single-qutrit |i><j| (in Fock index
/// order).
inline Eigen::MatrixXcd collective_operator(int i, int j, int num_qutrits) {
  if (i < 1 || i > 3 || j < 1 || j > 3) {
    throw BadLevelPair("collective operator levels must be in {1, 2, 3}");
  }
  if (num_qutrits < 1) {
    throw std::invalid_argument("need at least one qutrit");
  }
  const int dim = SymmetricFockState::dimension(num_qutrits);
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 0; m <= num_qutrits; ++m) {
    for (int n = 0; n <= m; ++n) {
      const int col = SymmetricFockState::index_of(n, m);
      std::array<int, 3> occ = {n, m - n, num_qutrits - m};
      if (i == j) {
        op(col, col) = occ[i - 1];
        continue;
      }
      if (occ[j - 1] < 1) continue;
      const double amp = std::sqrt(static_cast<double>(occ[j - 1]) *
                                   (occ[i - 1] + 1));
      std::array<int, 3> target = occ;
      --target[j - 1];
      ++target[i - 1];
      const int row = SymmetricFockState::index_of(target[0],
                                                   target[0] + target[1]);
      op(row, col) = amp;
    }
  }
  return op;
}

/// Label (alpha, beta) of an su(3) coherent state of N qutrits.
struct CoherentLabel {
  int num_qutrits = 1;
  Complex alpha;
  Complex beta;

  /// C = 1 + |alpha|^2 (1 + |beta|^2) >= 1.
  double capacity() const {
    return 1.0 + std::norm(alpha) * (1.0 + std::norm(beta));
  }
};

namespace detail {

inline double log_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

inline Complex ipow(Complex base, int exponent) {
  Complex result(1.0);
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

}  // namespace detail

/// Coherent state in the Fock basis:
///   c(n, m) = C^{-N/2} sqrt(C(N, m) C(m, n)) alpha^m beta^n,
/// normalized for every label.
inline SymmetricFockState coherent_state(const CoherentLabel& label) {
  SymmetricFockState state(label.num_qutrits);
  const int N = label.num_qutrits;
  const double log_norm = -0.5 * N * std::log(label.capacity());
  for (int m = 0; m <= N; ++m) {
    for (int n = 0; n <= m; ++n) {
      const double log_binom =
          0.5 * (detail::log_choose(N, m) + detail::log_choose(m, n));
      state.coeff(n, m) = std::exp(log_binom + log_norm) *
                          detail::ipow(label.alpha, m) *
                          detail::ipow(label.beta, n);
    }
  }
  return state;
}

/// Closed-form expectation values in a coherent state.
struct CoherentMeanValues {
  double n1, n2, n3;      // level populations, sum N
  Complex s32, s21, s31;  // transition amplitudes
};

/// Populations (N/C)(|alpha beta|^2, |alpha|^2, 1) and transitions
/// (N/C)(alpha, |alpha|^2 beta, alpha beta).  The population ratios are
/// n3 : n2 : n1 = 1 : |alpha|^2 : |alpha beta|^2, and
/// arg<S31> = arg<S32> + arg<S21>.
inline CoherentMeanValues mean_values(const CoherentLabel& label) {
  const double scale = label.num_qutrits / label.capacity();
  CoherentMeanValues out{};
  out.n1 = scale * std::norm(label.alpha) * std::norm(label.beta);
  out.n2 = scale * std::norm(label.alpha);
  out.n3 = scale;
  out.s32 = scale * label.alpha;
  out.s21 = scale * std::norm(label.alpha) * label.beta;
  out.s31 = scale * label.alpha * label.beta;
  return out;
}

/// Closed-form overlap
///   <a|b> = [1 + conj(alpha_a) alpha_b (1 + conj(beta_a) beta_b)]^N
///           / (C_a C_b)^{N/2}.
inline Complex overlap(const CoherentLabel& a, const CoherentLabel& b) {
  if (a.num_qutrits != b.num_qutrits) {
    throw MismatchedN("overlap requires equal qutrit numbers");
  }
  const int N = a.num_qutrits;
  const Complex kernel =
      1.0 + std::conj(a.alpha) * b.alpha * (1.0 + std::conj(a.beta) * b.beta);
  return detail::ipow(kernel, N) /
         std::pow(a.capacity() * b.capacity(), 0.5 * N);
}

/// Density of the invariant measure with respect to d^2alpha d^2beta:
///   |alpha|^2 / [1 + |alpha|^2 (1 + |beta|^2)]^3.
inline double measure_weight(Complex alpha, Complex beta) {
  const double capacity = 1.0 + std::norm(alpha) * (1.0 + std::norm(beta));
  return std::norm(alpha) / (capacity * capacity * capacity);
}

/// Node counts for the 4-d label-space quadrature: per complex variable,
/// a radial Gauss-Legendre rule through r = t/(1-t) and equally spaced
/// phase nodes.
struct QuadratureScheme {
  int radial_nodes = 64;
  int phase_nodes = 16;
};

/// Evaluates (N+1)(N+2)/pi^2 Int dmu |alpha,beta><alpha,beta| with the
/// given scheme and returns the max-norm deviation from the identity on
/// the symmetric subspace.  Restricted to N <= 4 and bounded node counts
/// (throws QuadratureBudgetExceeded beyond them).
inline double verify_identity_resolution(int num_qutrits,
                                         const QuadratureScheme& scheme) {
  if (num_qutrits < 1) throw std::invalid_argument("need at least one qutrit");
  if (num_qutrits > 4) {
    throw QuadratureBudgetExceeded("identity resolution is limited to N <= 4");
  }
  if (scheme.radial_nodes < 2 || scheme.phase_nodes < 1) {
    throw InputError("quadrature scheme needs >= 2 radial and >= 1 phase nodes");
  }
  if (scheme.radial_nodes > 1024 || scheme.phase_nodes > 256) {
    throw QuadratureBudgetExceeded("quadrature scheme exceeds the node budget");
  }
  const int N = num_qutrits;
  const QuadratureRule radial =
      QuadratureRule::gauss_semi_infinite(scheme.radial_nodes);
  const double phase_weight = 2.0 * M_PI / scheme.phase_nodes;
  const int dim = SymmetricFockState::dimension(N);
  Eigen::MatrixXcd accum = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::VectorXcd psi(dim);
  for (std::size_t ia = 0; ia < radial.nodes.size(); ++ia) {
    for (int ka = 0; ka < scheme.phase_nodes; ++ka) {
      const Complex alpha =
          radial.nodes[ia] *
          std::exp(Complex(0.0, ka * 2.0 * M_PI / scheme.phase_nodes));
      for (std::size_t ib = 0; ib < radial.nodes.size(); ++ib) {
        for (int kb = 0; kb < scheme.phase_nodes; ++kb) {
          const Complex beta =
              radial.nodes[ib] *
              std::exp(Complex(0.0, kb * 2.0 * M_PI / scheme.phase_nodes));
          // polar-coordinate Jacobian r dr dtheta per complex variable
          const double weight = radial.weights[ia] * radial.weights[ib] *
                                phase_weight * phase_weight *
                                radial.nodes[ia] * radial.nodes[ib] *
                                measure_weight(alpha, beta);
          psi = coherent_state({N, alpha, beta}).coefficients();
          accum.noalias() += weight * (psi * psi.adjoint());
        }
      }
    }
  }
  accum *= (N + 1.0) * (N + 2.0) / (M_PI * M_PI);
  return (accum - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

/// Radial integration of the N = 1 coherent-state projectors at a fixed
/// phase point, with alpha = r23 e^{i phi23} and beta = r12 e^{i phi12}:
///   Delta(phi12, phi23) = (6/pi^2) Int |a,b><a,b| dmu/(dphi12 dphi23).
/// The diagonal equals (2 pi)^-2 I up to quadrature error; the three
/// off-diagonal entries share a common modulus.
inline Matrix3 radial_povm(const PhasePoint& point, int radial_nodes = 64) {
  if (radial_nodes < 2) {
    throw InputError("radial_povm needs at least 2 radial nodes");
  }
  if (radial_nodes > 4096) {
    throw QuadratureBudgetExceeded("radial_povm node budget exceeded");
  }
  const QuadratureRule radial = QuadratureRule::gauss_semi_infinite(radial_nodes);
  const Complex i(0.0, 1.0);
  const Complex dir23 = std::exp(i * point.phi23);
  const Complex dir12 = std::exp(i * point.phi12);
  Matrix3 accum = Matrix3::Zero();
  for (std::size_t a = 0; a < radial.nodes.size(); ++a) {
    const double r23 = radial.nodes[a];
    for (std::size_t b = 0; b < radial.nodes.size(); ++b) {
      const double r12 = radial.nodes[b];
      const Complex alpha = r23 * dir23;
      const Complex beta = r12 * dir12;
      const double capacity = 1.0 + std::norm(alpha) * (1.0 + std::norm(beta));
      Eigen::Vector3cd c;
      c[0] = alpha * beta;
      c[1] = alpha;
      c[2] = 1.0;
      c /= std::sqrt(capacity);
      const double weight = radial.weights[a] * radial.weights[b] * r23 * r12 *
                            measure_weight(alpha, beta);
      accum.noalias() += weight * (c * c.adjoint());
    }
  }
  return accum * (6.0 / (M_PI * M_PI));
}

/// Structure of the radially integrated POVM at one phase point, as
/// computed: diagonal values, off-diagonal moduli and phases for the
/// entries (2,1), (3,2), (3,1), and the common modulus ratio
/// off-diagonal/diagonal.
struct RadialPovmReport {
  std::array<double, 3> diagonal;
  std::array<double, 3> offdiag_modulus;  // entries (2,1), (3,2), (3,1)
  std::array<double, 3> offdiag_phase;
  double offdiag_to_diagonal_ratio;
};

inline RadialPovmReport radial_povm_report(const PhasePoint& point,
                                           int radial_nodes = 64) {
  const Matrix3 d = radial_povm(point, radial_nodes);
  RadialPovmReport report{};
  for (int k = 0; k < 3; ++k) report.diagonal[k] = std::real(d(k, k));
  const std::array<Complex, 3> off = {d(1, 0), d(2, 1), d(2, 0)};
  for (int k = 0; k < 3; ++k) {
    report.offdiag_modulus[k] = std::abs(off[k]);
    report.offdiag_phase[k] = std::arg(off[k]);
  }
  const double mean_diag =
      (report.diagonal[0] + report.diagonal[1] + report.diagonal[2]) / 3.0;
  const double mean_off = (report.offdiag_modulus[0] +
                           report.offdiag_modulus[1] +
                           report.offdiag_modulus[2]) /
                          3.0;
  report.offdiag_to_diagonal_ratio = mean_off / mean_diag;
  return report;
}

}  // namespace qutrit
