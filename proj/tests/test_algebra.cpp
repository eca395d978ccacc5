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

#include "qutrit/algebra.hpp"
#include "qutrit/sampling.hpp"

using namespace qutrit;

namespace {

Vec8 unit8(int r) {  // 1-based coordinate vector
  Vec8 v = Vec8::Zero();
  v[r - 1] = 1.0;
  return v;
}

Vec8 random_vec8(SeededSampler& sampler) {
  Vec8 v;
  for (int r = 0; r < 8; ++r) v[r] = sampler.normal();
  return v;
}

}  // namespace

TEST_CASE("Gell-Mann matrices form a trace-orthonormal Hermitian basis") {
  const auto& basis = gellmann_matrices();
  REQUIRE(basis.size() == 8);

  for (const auto& m : basis) {
    CHECK(is_hermitian(m));
    CHECK(std::abs(m.trace()) < 1e-15);
  }

  Matrix3 l3 = Matrix3::Zero();
  l3(0, 0) = 1;
  l3(1, 1) = -1;
  CHECK((basis[2] - l3).norm() == 0.0);

  Matrix3 l8 = Matrix3::Zero();
  const double s3 = std::sqrt(3.0);
  l8(0, 0) = 1 / s3;
  l8(1, 1) = 1 / s3;
  l8(2, 2) = -2 / s3;
  CHECK((basis[7] - l8).norm() < 1e-15);
  CHECK(std::real((basis[7] * basis[7]).trace()) == Catch::Approx(2.0));

  for (int r = 0; r < 8; ++r) {
    for (int s = 0; s < 8; ++s) {
      const Complex tr = (basis[r] * basis[s]).trace();
      CHECK(std::abs(tr - (r == s ? 2.0 : 0.0)) < 1e-14);
    }
  }
}

TEST_CASE("structure tensors reproduce the standard constants") {
  const auto& t = su3_structure();
  const double s3 = std::sqrt(3.0);

  CHECK(t.f_at(1, 2, 3) == Catch::Approx(1.0).margin(1e-14));
  CHECK(t.f_at(4, 5, 8) == Catch::Approx(s3 / 2).margin(1e-14));
  CHECK(t.f_at(6, 7, 8) == Catch::Approx(s3 / 2).margin(1e-14));
  CHECK(t.f_at(1, 2, 4) == Catch::Approx(0.0).margin(1e-14));
  CHECK(t.d_at(1, 1, 8) == Catch::Approx(1 / s3).margin(1e-14));
  CHECK(t.d_at(3, 3, 8) == Catch::Approx(1 / s3).margin(1e-14));
  CHECK(t.d_at(8, 8, 8) == Catch::Approx(-1 / s3).margin(1e-14));
}

TEST_CASE("tensors are totally antisymmetric / symmetric") {
  const auto& t = su3_structure();
  double worst_f = 0, worst_d = 0;
  for (int r = 0; r < 8; ++r) {
    for (int s = 0; s < 8; ++s) {
      for (int u = 0; u < 8; ++u) {
        const double f = t.f[StructureTensors::flat(r, s, u)];
        worst_f = std::max(worst_f,
                           std::abs(f + t.f[StructureTensors::flat(s, r, u)]));
        worst_f = std::max(worst_f,
                           std::abs(f - t.f[StructureTensors::flat(u, r, s)]));
        const double d = t.d[StructureTensors::flat(r, s, u)];
        worst_d = std::max(worst_d,
                           std::abs(d - t.d[StructureTensors::flat(s, r, u)]));
        worst_d = std::max(worst_d,
                           std::abs(d - t.d[StructureTensors::flat(u, s, r)]));
      }
    }
  }
  CHECK(worst_f < 1e-12);
  CHECK(worst_d < 1e-12);
}

TEST_CASE("re-contracting the tensors closes the algebra") {
  const auto& basis = gellmann_matrices();
  const auto& t = su3_structure();
  const Complex i(0.0, 1.0);
  double worst_comm = 0, worst_anti = 0;
  for (int r = 0; r < 8; ++r) {
    for (int s = 0; s < 8; ++s) {
      Matrix3 comm_rhs = Matrix3::Zero();
      Matrix3 anti_rhs =
          (r == s ? 4.0 / 3.0 : 0.0) * Matrix3::Identity();
      for (int u = 0; u < 8; ++u) {
        comm_rhs += 2.0 * i * t.f[StructureTensors::flat(r, s, u)] * basis[u];
        anti_rhs += 2.0 * t.d[StructureTensors::flat(r, s, u)] * basis[u];
      }
      const Matrix3 comm = basis[r] * basis[s] - basis[s] * basis[r];
      const Matrix3 anti = basis[r] * basis[s] + basis[s] * basis[r];
      worst_comm = std::max(worst_comm, (comm - comm_rhs).norm());
      worst_anti = std::max(worst_anti, (anti - anti_rhs).norm());
    }
  }
  CHECK(worst_comm < 1e-12);
  CHECK(worst_anti < 1e-12);
}

TEST_CASE("Jacobi identity holds on f") {
  const auto& t = su3_structure();
  double worst = 0;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      for (int c = 0; c < 8; ++c) {
        for (int d = 0; d < 8; ++d) {
          double acc = 0;
          for (int e = 0; e < 8; ++e) {
            acc += t.f[StructureTensors::flat(a, b, e)] *
                       t.f[StructureTensors::flat(e, c, d)] +
                   t.f[StructureTensors::flat(c, b, e)] *
                       t.f[StructureTensors::flat(a, e, d)] +
                   t.f[StructureTensors::flat(d, b, e)] *
                       t.f[StructureTensors::flat(a, c, e)];
          }
          worst = std::max(worst, std::abs(acc));
        }
      }
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("derive_structure_tensors rejects a non-orthonormal basis") {
  auto basis = gellmann_matrices();
  basis[0] *= 2.0;
  CHECK_THROWS_AS(derive_structure_tensors(basis), NonOrthogonalBasis);
}

TEST_CASE("wedge product") {
  SeededSampler sampler(41);
  const Vec8 a = random_vec8(sampler);
  const Vec8 b = random_vec8(sampler);

  CHECK(wedge(a, a).norm() < 1e-12 * a.squaredNorm());
  CHECK((wedge(a, b) + wedge(b, a)).norm() < 1e-12);
  CHECK((wedge(unit8(1), unit8(2)) - unit8(3)).norm() < 1e-14);
}

TEST_CASE("star product") {
  SeededSampler sampler(42);
  const Vec8 a = random_vec8(sampler);
  const Vec8 b = random_vec8(sampler);

  CHECK((star(a, b) - star(b, a)).norm() < 1e-12);
  CHECK((star(unit8(8), unit8(8)) + unit8(8)).norm() < 1e-14);
  CHECK((star(unit8(3), unit8(3)) - unit8(8)).norm() < 1e-14);
}
