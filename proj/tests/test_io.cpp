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
#include <sstream>

#include "qutrit/io.hpp"
#include "qutrit/sampling.hpp"

using namespace qutrit;

TEST_CASE("amplitude descriptors round-trip") {
  SeededSampler sampler(67);
  for (int k = 0; k < 20; ++k) {
    const PureState psi = sample_pure_state(sampler);
    const ParsedState parsed = state_from_json(amplitudes_to_json(psi));
    REQUIRE(parsed.pure.has_value());
    CHECK((parsed.pure->amplitudes() - psi.amplitudes()).norm() < 1e-15);
  }
}

TEST_CASE("angle descriptors round-trip") {
  SeededSampler sampler(71);
  for (int k = 0; k < 20; ++k) {
    const PureState psi = sample_pure_state(sampler);
    const ParsedState parsed = state_from_json(angles_to_json(psi.angles()));
    REQUIRE(parsed.pure.has_value());
    CHECK((parsed.pure->amplitudes() - psi.amplitudes()).norm() < 1e-12);
  }
}

TEST_CASE("bloch descriptors round-trip") {
  SeededSampler sampler(73);
  for (int k = 0; k < 20; ++k) {
    const PureState a = sample_pure_state(sampler);
    const PureState b = sample_pure_state(sampler);
    const double w = sampler.uniform();
    const DensityMatrix rho(w * a.projector() + (1 - w) * b.projector());
    const Bloch8 n = bloch_from_density(rho);
    const ParsedState parsed = state_from_json(bloch_to_json(n));
    CHECK_FALSE(parsed.pure.has_value());
    CHECK((bloch_from_density(parsed.rho).n - n.n).norm() < 1e-12);
  }
}

TEST_CASE("malformed state descriptors are rejected") {
  CHECK_THROWS_AS(state_from_json(json::array()), InputError);
  CHECK_THROWS_AS(state_from_json(json{{"foo", 1}}), InputError);
  CHECK_THROWS_AS(state_from_json(json{{"amplitudes", {1, 2, 3}}}), InputError);
  CHECK_THROWS_AS(
      state_from_json(json{{"amplitudes", {{1, 0}, {0, 0}}}}), InputError);
  CHECK_THROWS_AS(state_from_json(json{{"angles", {{"xi", 1.0}}}}), InputError);
  CHECK_THROWS_AS(state_from_json(json{{"bloch", {0, 0, 0}}}), InputError);
  // a bloch vector outside the state space is a domain error, not input
  json outside = json{{"bloch", {1, 0, 0, 0, 0, 0, 0, 0}}};
  CHECK_THROWS_AS(state_from_json(outside), NotAState);
}

TEST_CASE("quadrature scheme descriptors") {
  const QuadratureScheme scheme{48, 12};
  const QuadratureScheme back = scheme_from_json(scheme_to_json(scheme));
  CHECK(back.radial_nodes == 48);
  CHECK(back.phase_nodes == 12);
  // defaults fill in missing fields
  const QuadratureScheme partial = scheme_from_json(json::object());
  CHECK(partial.radial_nodes == 64);
  CHECK(partial.phase_nodes == 16);
}

TEST_CASE("phase grid CSV round-trips losslessly") {
  SeededSampler sampler(79);
  const PhaseGrid grid = phase_distribution(
      DensityMatrix::pure(sample_pure_state(sampler)), PovmParams(), 12);

  std::stringstream buffer;
  write_phase_grid_csv(buffer, grid);

  const std::string text = buffer.str();
  CHECK(text.rfind("phi12,phi23,P\n", 0) == 0);

  std::stringstream reread(text);
  const PhaseGrid back = read_phase_grid_csv(reread);
  REQUIRE(back.resolution == grid.resolution);
  for (std::size_t k = 0; k < grid.values.size(); ++k) {
    CHECK(back.values[k] == grid.values[k]);  // exact at 17 digits
  }
}

TEST_CASE("phase grid CSV rejects malformed input") {
  std::stringstream missing_header("1,2,3\n");
  CHECK_THROWS_AS(read_phase_grid_csv(missing_header), InputError);

  std::stringstream bad_field("phi12,phi23,P\n0,0,abc\n");
  CHECK_THROWS_AS(read_phase_grid_csv(bad_field), InputError);

  std::stringstream bad_count("phi12,phi23,P\n0,0,1\n0,1,1\n");
  CHECK_THROWS_AS(read_phase_grid_csv(bad_count), InputError);
}
