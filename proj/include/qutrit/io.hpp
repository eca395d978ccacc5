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

#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qutrit/coherent.hpp"
#include "qutrit/povm.hpp"
#include "qutrit/state.hpp"

namespace qutrit {

using nlohmann::json;

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError("complex values must be [re, im] number pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

/// State descriptor, one of
///   {"amplitudes": [[re, im], [re, im], [re, im]]}
///   {"angles": {"xi": x, "theta": t, "phi12": p, "phi13": q}}
///   {"bloch": [n1, ..., n8]}
struct ParsedState {
  DensityMatrix rho;
  std::optional<PureState> pure;  // set for the amplitude/angle forms
};

inline ParsedState state_from_json(const json& j) {
  if (!j.is_object()) throw InputError("state descriptor must be an object");
  if (j.contains("amplitudes")) {
    const json& amps = j.at("amplitudes");
    if (!amps.is_array() || amps.size() != 3) {
      throw InputError("amplitudes must hold exactly 3 complex entries");
    }
    Eigen::Vector3cd c;
    for (int k = 0; k < 3; ++k) c[k] = complex_from_json(amps[k]);
    const PureState psi = PureState::from_amplitudes(c);
    return {DensityMatrix::pure(psi), psi};
  }
  if (j.contains("angles")) {
    const json& a = j.at("angles");
    for (const char* key : {"xi", "theta", "phi12", "phi13"}) {
      if (!a.contains(key) || !a.at(key).is_number()) {
        throw InputError(std::string("angles descriptor is missing ") + key);
      }
    }
    const PureState psi = PureState::from_angles(
        a.at("xi").get<double>(), a.at("theta").get<double>(),
        a.at("phi12").get<double>(), a.at("phi13").get<double>());
    return {DensityMatrix::pure(psi), psi};
  }
  if (j.contains("bloch")) {
    const json& n = j.at("bloch");
    if (!n.is_array() || n.size() != 8) {
      throw InputError("bloch descriptor must hold 8 real components");
    }
    Bloch8 bloch;
    for (int r = 0; r < 8; ++r) {
      if (!n[r].is_number()) throw InputError("bloch components must be numbers");
      bloch.n[r] = n[r].get<double>();
    }
    return {density_from_bloch(bloch), std::nullopt};
  }
  throw InputError("state descriptor needs amplitudes, angles or bloch");
}

inline json amplitudes_to_json(const PureState& psi) {
  json amps = json::array();
  for (int k = 0; k < 3; ++k) amps.push_back(complex_to_json(psi.amplitudes()[k]));
  return json{{"amplitudes", amps}};
}

inline json angles_to_json(const StateAngles& a) {
  return json{{"angles",
               {{"xi", a.xi},
                {"theta", a.theta},
                {"phi12", a.phi12},
                {"phi13", a.phi13}}}};
}

inline json bloch_to_json(const Bloch8& bloch) {
  json n = json::array();
  for (int r = 0; r < 8; ++r) n.push_back(bloch.n[r]);
  return json{{"bloch", n}};
}

inline json matrix_to_json(const Matrix3& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline QuadratureScheme scheme_from_json(const json& j) {
  QuadratureScheme scheme;
  if (!j.is_object()) throw InputError("quadrature scheme must be an object");
  if (j.contains("radial_nodes")) scheme.radial_nodes = j.at("radial_nodes").get<int>();
  if (j.contains("phase_nodes")) scheme.phase_nodes = j.at("phase_nodes").get<int>();
  return scheme;
}

inline json scheme_to_json(const QuadratureScheme& scheme) {
  return json{{"radial_nodes", scheme.radial_nodes},
              {"phase_nodes", scheme.phase_nodes}};
}

inline json radial_povm_report_to_json(const RadialPovmReport& report) {
  return json{{"diagonal", report.diagonal},
              {"offdiag_modulus", report.offdiag_modulus},
              {"offdiag_phase", report.offdiag_phase},
              {"offdiag_to_diagonal_ratio", report.offdiag_to_diagonal_ratio}};
}

/// CSV with header phi12,phi23,P, row-major with phi12 as the outer
/// index, 17 significant digits (lossless double round trip).
inline void write_phase_grid_csv(std::ostream& os, const PhaseGrid& grid) {
  os << "phi12,phi23,P\n";
  os << std::setprecision(17);
  const double step = 2.0 * M_PI / grid.resolution;
  for (int a = 0; a < grid.resolution; ++a) {
    for (int b = 0; b < grid.resolution; ++b) {
      os << a * step << ',' << b * step << ',' << grid.value_at(a, b) << '\n';
    }
  }
}

inline PhaseGrid read_phase_grid_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "phi12,phi23,P") {
    throw InputError("phase grid CSV must start with header phi12,phi23,P");
  }
  std::vector<double> values;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    double cols[3];
    for (int k = 0; k < 3; ++k) {
      if (!std::getline(row, field, ',')) {
        throw InputError("phase grid CSV rows need 3 columns");
      }
      try {
        cols[k] = std::stod(field);
      } catch (const std::exception&) {
        throw InputError("phase grid CSV holds a non-numeric field");
      }
    }
    values.push_back(cols[2]);
  }
  const int resolution = static_cast<int>(std::lround(std::sqrt(
      static_cast<double>(values.size()))));
  if (resolution < 1 ||
      static_cast<std::size_t>(resolution) * resolution != values.size()) {
    throw InputError("phase grid CSV row count is not a perfect square");
  }
  return PhaseGrid{resolution, std::move(values)};
}

}  // namespace qutrit
