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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "qutrit/quadrature.hpp"
#include "qutrit/sampling.hpp"
#include "qutrit/state.hpp"

using namespace qutrit;

TEST_CASE("weights sum to the interval length") {
  for (int n : {2, 5, 16, 33, 128}) {
    const auto gl = QuadratureRule::gauss_legendre(n, -1.5, 4.0);
    CHECK(std::abs(gl.weight_sum() - 5.5) < 1e-14 * 5.5);
    const auto tp = QuadratureRule::trapezoid_periodic(n, 0.0, 2 * M_PI);
    CHECK(std::abs(tp.weight_sum() - 2 * M_PI) < 1e-14 * 2 * M_PI);
  }
}

TEST_CASE("probe integrals") {
  const auto tp = QuadratureRule::trapezoid_periodic(16, 0.0, 2 * M_PI);
  CHECK(std::abs(integrate_1d([](double) { return 1.0; }, tp) - 2 * M_PI) <
        1e-14);

  const auto tp8 = QuadratureRule::trapezoid_periodic(8, 0.0, 2 * M_PI);
  const double sin2 =
      integrate_1d([](double x) { return std::sin(x) * std::sin(x); }, tp8);
  CHECK(std::abs(sin2 - M_PI) < 1e-12);

  const auto semi = QuadratureRule::gauss_semi_infinite(32);
  const double expint =
      integrate_1d([](double r) { return std::exp(-r); }, semi);
  CHECK(std::abs(expint - 1.0) < 1e-10);
}

TEST_CASE("doubling nodes never increases the probe error") {
  double previous = std::numeric_limits<double>::infinity();
  for (int n : {8, 16, 32, 64}) {
    const auto semi = QuadratureRule::gauss_semi_infinite(n);
    const double err = std::abs(
        integrate_1d([](double r) { return std::exp(-r); }, semi) - 1.0);
    CHECK(err <= previous + 1e-15);
    previous = err;
  }

  previous = std::numeric_limits<double>::infinity();
  for (int n : {2, 4, 8}) {
    const auto tp = QuadratureRule::trapezoid_periodic(n, 0.0, 2 * M_PI);
    const double err = std::abs(
        integrate_1d([](double x) { return std::sin(x) * std::sin(x); }, tp) -
        M_PI);
    CHECK(err <= previous + 1e-15);
    previous = err;
  }
}

TEST_CASE("non-finite integrands are rejected") {
  const auto tp = QuadratureRule::trapezoid_periodic(4, 0.0, 1.0);
  CHECK_THROWS_AS(integrate_1d([](double x) { return 1.0 / x; }, tp),
                  NonFiniteIntegrand);
}

TEST_CASE("pairwise sum matches plain summation") {
  std::vector<double> terms(1000);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    terms[k] = std::sin(0.1 * static_cast<double>(k));
  }
  double plain = 0;
  for (double t : terms) plain += t;
  CHECK(std::abs(pairwise_sum(terms) - plain) < 1e-11);
}

TEST_CASE("sampler streams are reproducible") {
  SeededSampler a(123456789), b(123456789);
  for (int k = 0; k < 100; ++k) {
    CHECK(a.uniform() == b.uniform());
    CHECK(a.normal() == b.normal());
  }

  SeededSampler s1(7), s2(7);
  for (int k = 0; k < 16; ++k) {
    const PureState p1 = sample_pure_state(s1);
    const PureState p2 = sample_pure_state(s2);
    CHECK((p1.amplitudes() - p2.amplitudes()).norm() == 0.0);
  }
}

TEST_CASE("sampled states are pure and concentrate on the mixed state") {
  SeededSampler sampler(2024);
  Matrix3 mean = Matrix3::Zero();
  const int count = 10000;
  for (int k = 0; k < count; ++k) {
    const PureState psi = sample_pure_state(sampler);
    mean += psi.projector();
    if (k < 200) {
      CHECK(is_pure_bloch(bloch_from_pure(psi), 1e-8));
    }
  }
  mean /= static_cast<double>(count);
  CHECK((mean - Matrix3::Identity() / 3.0).cwiseAbs().maxCoeff() < 0.03);
}
