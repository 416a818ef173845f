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

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foldweb/clifford.hpp"
#include "foldweb/pauli.hpp"
#include "foldweb/zx.hpp"

namespace foldweb {

enum class QubitRole : uint8_t { Data, AncillaX, AncillaZ };

const char *qubit_role_name(QubitRole role);

struct QubitDecl {
  int id = 0;
  QubitRole role = QubitRole::Data;
  /// Lattice position in half-spacing units (data on even coordinates,
  /// plaquette ancillas on odd ones).
  int row = 0;
  int col = 0;
  bool open_input = false;
  bool open_output = false;
  bool operator==(const QubitDecl &) const = default;
};

struct Gate {
  GateKind kind = GateKind::H;
  /// Qubit ids. CNOT is (control, target); CZ is stored lower id first.
  std::vector<int> qubits;
  /// Set for measurements only, "m<k>".
  std::string outcome;

  static Gate prep_z(int q) { return {GateKind::PrepZ, {q}, {}}; }
  static Gate prep_x(int q) { return {GateKind::PrepX, {q}, {}}; }
  static Gate h(int q) { return {GateKind::H, {q}, {}}; }
  static Gate s(int q) { return {GateKind::S, {q}, {}}; }
  static Gate sdg(int q) { return {GateKind::Sdg, {q}, {}}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}, {}}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, {std::min(a, b), std::max(a, b)}, {}}; }
  static Gate meas_x(int q, std::string outcome) { return {GateKind::MeasX, {q}, std::move(outcome)}; }
  static Gate meas_z(int q, std::string outcome) { return {GateKind::MeasZ, {q}, std::move(outcome)}; }

  bool operator==(const Gate &) const = default;
};

using TimeSlice = std::vector<Gate>;

struct CliffordCircuit {
  std::optional<int> distance;
  std::vector<QubitDecl> qubits;
  std::vector<TimeSlice> slices;

  /// Position of a qubit id in `qubits`; throws NotFound.
  size_t index_of(int qubit_id) const;
  const QubitDecl &qubit(int qubit_id) const { return qubits[index_of(qubit_id)]; }
  /// Outcome ids in measurement order.
  std::vector<std::string> outcome_ids() const;
  size_t gate_count() const;

  bool operator==(const CliffordCircuit &) const = default;
};

enum class CircuitViolationKind : uint8_t {
  UnknownQubit,
  DuplicateQubitId,
  BadArity,
  RepeatedTarget,
  OverlappingSlice,
  UseBeforePrep,
  UseAfterMeasure,
  PrepAfterUse,
  MissingOutcome,
  DuplicateOutcome,
  DanglingWire,
};

const char *violation_name(CircuitViolationKind kind);

struct CircuitViolation {
  CircuitViolationKind kind;
  int slice = -1;
  int qubit = -1;
  std::string message;
};

/// Structural checks: slice disjointness, prep before use, nothing after a
/// measurement, outcome registry, and that every live wire ends in a
/// measurement or an open output.
std::vector<CircuitViolation> validate_circuit(const CliffordCircuit &c);

/// The wire of one qubit crossing the boundary just before slice `boundary`
/// (boundary == slices.size() is after the last slice). `swapped` is set when
/// an odd number of Hadamards sit on the edge between its first endpoint and
/// this boundary, so the Pauli carried there is the edge label with x and z
/// exchanged.
struct WireRef {
  EdgeId edge;
  bool swapped = false;
};

struct LegMap {
  std::map<std::pair<int, int>, WireRef> wires;
  std::map<NodeId, std::string> outcome_of;
  std::map<NodeId, GateKind> prep_of;
  std::map<int, NodeId> input_leg;
  std::map<int, NodeId> output_leg;
  /// Qubit id of every Prep, Measure and BoundaryLeg node.
  std::map<NodeId, int> qubit_of;
};

struct Lowered {
  ZxDiagram diagram;
  LegMap legs;
};

/// Gadget-per-gate translation. Throws ValidationError for an invalid circuit.
Lowered lower_to_zx(const CliffordCircuit &c);

struct PropagationResult {
  /// Pauli on the open-output qubits, in circuit order (see `output_qubits`),
  /// with every measurement outcome taken as 0.
  PauliString final;
  std::vector<int> output_qubits;
  /// Outcomes whose bits flip the sign, in measurement order.
  std::vector<std::string> outcome_support;

  int sign() const { return final.sign(); }
};

/// Pushes a stabilizer of the circuit's starting point forward gate by gate.
/// `placement` is indexed like `c.qubits`; it may be non-identity only on open
/// inputs and on prepared qubits where it matches the prep basis (entered at
/// the prep slice). Throws UnsupportedPlacement or
/// AnticommutesWithMeasurement.
PropagationResult propagate_pauli(const CliffordCircuit &c, const PauliString &placement);

/// The open-output qubit ids in circuit order.
std::vector<int> output_qubits(const CliffordCircuit &c);

/// Replaces every open input by half of a Bell pair whose other half is a new
/// open-output reference qubit. A correlator P_in -> P_out of the original
/// becomes the stabilizer P_in(reference) * P_out(outputs) of the closed
/// circuit, up to sign.
struct ClosedCircuit {
  CliffordCircuit circuit;
  /// Original input qubit id -> reference qubit id.
  std::map<int, int> reference_of;
};
ClosedCircuit close_open_inputs(const CliffordCircuit &c);

/// Numeric part of an outcome id "m<k>"; outcomes that do not follow the
/// pattern sort after all that do.
long outcome_number(const std::string &outcome);
void sort_outcomes(std::vector<std::string> &outcomes);

}  // namespace foldweb
