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

#include <stdexcept>

namespace qutrit {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A basis handed to derive_structure_tensors is not trace-orthonormal.
struct NonOrthogonalBasis : Error {
  using Error::Error;
};

/// A matrix or amplitude vector does not describe a valid quantum state.
struct NotAState : Error {
  using Error::Error;
};

/// An operation requiring pure states received a mixed one.
struct NotPure : Error {
  using Error::Error;
};

/// A level index outside {1, 2, 3}.
struct BadLevel : Error {
  using Error::Error;
};

/// A level pair not supported by the requested operation.
struct BadLevelPair : Error {
  using Error::Error;
};

/// Coefficients that were required to be normalized are not.
struct NotNormalized : Error {
  using Error::Error;
};

/// Two collective states or labels with different qutrit counts.
struct MismatchedN : Error {
  using Error::Error;
};

/// The sample points of a reconstruction make the design matrix
/// numerically singular.
struct SingularDesign : Error {
  using Error::Error;
};

/// A quadrature request exceeds the configured cost limits.
struct QuadratureBudgetExceeded : Error {
  using Error::Error;
};

/// An integrand evaluated to NaN or infinity at a quadrature node.
struct NonFiniteIntegrand : Error {
  using Error::Error;
};

/// Malformed user input (JSON, CSV, CLI values).
struct InputError : Error {
  using Error::Error;
};

}  // namespace qutrit
