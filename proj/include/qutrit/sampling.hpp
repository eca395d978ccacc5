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
#include <cstdint>
#include <random>

#include "qutrit/state.hpp"

namespace qutrit {

/// Deterministic random source.  The generator is pinned to mt19937_64
/// (its output sequence is fixed by the C++ standard); uniforms take the
/// top 53 bits, normals come from Box-Muller.  Identical seeds therefore
/// produce identical streams on every platform.  Single-owner: not safe
/// to share between threads.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im);
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-uniform pure qutrit: three complex Gaussians, normalized and
/// gauged by the PureState constructor.
inline PureState sample_pure_state(SeededSampler& sampler) {
  Eigen::Vector3cd c;
  for (int k = 0; k < 3; ++k) c[k] = sampler.complex_normal();
  return PureState::from_amplitudes(c);
}

/// Haar-uniform state orthogonal to psi: sample, project out the psi
/// component, renormalize.
inline PureState sample_orthogonal_state(SeededSampler& sampler,
                                         const PureState& psi) {
  for (;;) {
    const PureState candidate = sample_pure_state(sampler);
    Eigen::Vector3cd c = candidate.amplitudes();
    c -= psi.amplitudes().dot(c) * psi.amplitudes();
    if (c.norm() > 1e-6) return PureState::from_amplitudes(c);
  }
}

}  // namespace qutrit
