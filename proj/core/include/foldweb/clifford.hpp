// Copyright 2026 The foldweb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include "foldweb/pauli.hpp"

namespace foldweb {

enum class GateKind : uint8_t { PrepZ, PrepX, H, S, Sdg, CNOT, CZ, MeasX, MeasZ };

/// Wire name used in circuit JSON ("prep_z", "cnot", ...).
std::string_view gate_name(GateKind kind);
/// Inverse of gate_name; throws SchemaError for anything outside the gate set.
GateKind gate_from_name(std::string_view name);
size_t gate_arity(GateKind kind);
bool is_unitary(GateKind kind);
bool is_prep(GateKind kind);
bool is_measurement(GateKind kind);
/// The Pauli a preparation stabilizes or a measurement observes (X or Z).
Pauli gate_basis(GateKind kind);

/// Image of one generator under conjugation, restricted to the gate's qubits.
struct GeneratorImage {
  std::array<Pauli, 2> paulis;
  bool negative;
};

/// Heisenberg action U P U^dagger of a unitary gate, given as the images of
/// X_0, Z_0, X_1, Z_1 (single-qubit gates use the first two entries).
///
/// This table is the only place the sign conventions live:
///   S X S^dag = Y,  S Y S^dag = -X,  S Z S^dag = Z
/// with Y = iXZ. Everything that conjugates a Pauli goes through it, either
/// directly (conjugate) or by being tested against it (the tableau's bitwise
/// update rules).
struct ConjugationRule {
  size_t arity;
  std::array<GeneratorImage, 4> images;
};

const ConjugationRule &conjugation_rule(GateKind kind);

/// p <- U p U^dagger for the unitary gate `kind` acting on `targets` (indices
/// into p). Throws std::invalid_argument for non-unitary kinds.
void conjugate(PauliString &p, GateKind kind, std::span<const size_t> targets);

}  // namespace foldweb
