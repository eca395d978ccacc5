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

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qutrit/errors.hpp"

namespace qutrit {

/// Deterministic pairwise-tree sum; bit-stable regardless of how callers
/// later parallelize node evaluation.
inline double pairwise_sum(const double* data, std::size_t n) {
  if (n <= 8) {
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += data[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& terms) {
  return pairwise_sum(terms.data(), terms.size());
}

enum class QuadratureKind { gauss_legendre, trapezoid_periodic };

/// A fully materialized 1-d quadrature rule: nodes and weights, possibly
/// after a change of variables (see gauss_semi_infinite).
struct QuadratureRule {
  QuadratureKind kind;
  std::vector<double> nodes;
  std::vector<double> weights;

  double weight_sum() const { return pairwise_sum(weights); }

  /// Gauss-Legendre rule with n nodes on [a, b].
  static QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 2) throw std::invalid_argument("quadrature needs >= 2 nodes");
    QuadratureRule rule{QuadratureKind::gauss_legendre, {}, {}};
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on P_n, seeded with the Chebyshev-like estimate.
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      rule.nodes[i] = a + 0.5 * (b - a) * (x + 1.0);
      rule.weights[i] = (b - a) / ((1.0 - x * x) * dp * dp);
    }
    return rule;
  }

  /// Equally spaced rule on [a, b) with the left endpoint included; for
  /// periodic integrands this coincides with the trapezoid rule and is
  /// exact for Fourier modes of order below n.
  static QuadratureRule trapezoid_periodic(int n, double a, double b) {
    if (n < 2) throw std::invalid_argument("quadrature needs >= 2 nodes");
    QuadratureRule rule{QuadratureKind::trapezoid_periodic, {}, {}};
    const double h = (b - a) / n;
    rule.nodes.resize(n);
    rule.weights.assign(n, h);
    for (int k = 0; k < n; ++k) rule.nodes[k] = a + k * h;
    return rule;
  }

  /// Rule for integrals over [0, inf) via the substitution r = t/(1-t),
  /// t in [0, 1], with Gauss-Legendre nodes in t.  Suitable for integrands
  /// decaying at least as fast as r^-2.
  static QuadratureRule gauss_semi_infinite(int n) {
    QuadratureRule rule = gauss_legendre(n, 0.0, 1.0);
    for (int i = 0; i < n; ++i) {
      const double t = rule.nodes[i];
      const double om = 1.0 - t;
      rule.nodes[i] = t / om;
      rule.weights[i] /= om * om;
    }
    return rule;
  }
};

/// Weighted node sum of f over the rule, reduced with a pairwise tree.
/// Throws NonFiniteIntegrand if f is NaN or infinite at any node.
template <class F>
double integrate_1d(F&& f, const QuadratureRule& rule) {
  std::vector<double> terms(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double value = f(rule.nodes[i]);
    if (!std::isfinite(value)) {
      throw NonFiniteIntegrand("integrand is not finite at node " +
                               std::to_string(rule.nodes[i]));
    }
    terms[i] = rule.weights[i] * value;
  }
  return pairwise_sum(terms);
}

}  // namespace qutrit
