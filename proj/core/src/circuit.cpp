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

#include "foldweb/circuit.hpp"

#include <set>

#include "foldweb/errors.hpp"

namespace foldweb {

const char *qubit_role_name(QubitRole role) {
  switch (role) {
    case QubitRole::Data:
      return "data";
    case QubitRole::AncillaX:
      return "ancilla_x";
    case QubitRole::AncillaZ:
      return "ancilla_z";
  }
  return "?";
}

const char *violation_name(CircuitViolationKind kind) {
  switch (kind) {
    case CircuitViolationKind::UnknownQubit:
      return "UnknownQubit";
    case CircuitViolationKind::DuplicateQubitId:
      return "DuplicateQubitId";
    case CircuitViolationKind::BadArity:
      return "BadArity";
    case CircuitViolationKind::RepeatedTarget:
      return "RepeatedTarget";
    case CircuitViolationKind::OverlappingSlice:
      return "OverlappingSlice";
    case CircuitViolationKind::UseBeforePrep:
      return "UseBeforePrep";
    case CircuitViolationKind::UseAfterMeasure:
      return "UseAfterMeasure";
    case CircuitViolationKind::PrepAfterUse:
      return "PrepAfterUse";
    case CircuitViolationKind::MissingOutcome:
      return "MissingOutcome";
    case CircuitViolationKind::DuplicateOutcome:
      return "DuplicateOutcome";
    case CircuitViolationKind::DanglingWire:
      return "DanglingWire";
  }
  return "?";
}

size_t CliffordCircuit::index_of(int qubit_id) const {
  for (size_t k = 0; k < qubits.size(); k++) {
    if (qubits[k].id == qubit_id) {
      return k;
    }
  }
  throw NotFound("no qubit with id " + std::to_string(qubit_id));
}

std::vector<std::string> CliffordCircuit::outcome_ids() const {
  std::vector<std::string> out;
  for (const auto &slice : slices) {
    for (const auto &g : slice) {
      if (is_measurement(g.kind)) {
        out.push_back(g.outcome);
      }
    }
  }
  return out;
}

size_t CliffordCircuit::gate_count() const {
  size_t n = 0;
  for (const auto &slice : slices) {
    n += slice.size();
  }
  return n;
}

namespace {

enum class WireState : uint8_t { Fresh, Live, Measured };

// Maps ids to positions once; unknown ids map to nothing.
std::map<int, size_t> index_map(const CliffordCircuit &c) {
  std::map<int, size_t> m;
  for (size_t k = 0; k < c.qubits.size(); k++) {
    m.emplace(c.qubits[k].id, k);
  }
  return m;
}

void require_valid(const CliffordCircuit &c) {
  auto v = validate_circuit(c);
  if (!v.empty()) {
    throw ValidationError(std::string("invalid circuit: ") + violation_name(v.front().kind) + ": " + v.front().message);
  }
}

}  // namespace

std::vector<CircuitViolation> validate_circuit(const CliffordCircuit &c) {
  std::vector<CircuitViolation> out;
  auto add = [&](CircuitViolationKind kind, int slice, int qubit, std::string msg) {
    out.push_back({kind, slice, qubit, std::move(msg)});
  };

  std::map<int, size_t> index;
  for (size_t k = 0; k < c.qubits.size(); k++) {
    if (!index.emplace(c.qubits[k].id, k).second) {
      add(CircuitViolationKind::DuplicateQubitId, -1, c.qubits[k].id, "qubit id declared twice");
    }
  }
  std::vector<WireState> state(c.qubits.size(), WireState::Fresh);
  for (size_t k = 0; k < c.qubits.size(); k++) {
    if (c.qubits[k].open_input) {
      state[k] = WireState::Live;
    }
  }

  std::set<std::string> outcomes;
  for (size_t s = 0; s < c.slices.size(); s++) {
    int si = static_cast<int>(s);
    std::set<int> used;
    for (const Gate &g : c.slices[s]) {
      if (g.qubits.size() != gate_arity(g.kind)) {
        add(CircuitViolationKind::BadArity, si, g.qubits.empty() ? -1 : g.qubits[0],
            std::string(gate_name(g.kind)) + " expects " + std::to_string(gate_arity(g.kind)) + " qubit(s)");
        continue;
      }
      if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
        add(CircuitViolationKind::RepeatedTarget, si, g.qubits[0], "two-qubit gate on a single qubit");
        continue;
      }
      if (is_measurement(g.kind)) {
        if (g.outcome.empty()) {
          add(CircuitViolationKind::MissingOutcome, si, g.qubits[0], "measurement without outcome id");
        } else if (!outcomes.insert(g.outcome).second) {
          add(CircuitViolationKind::DuplicateOutcome, si, g.qubits[0], "outcome id '" + g.outcome + "' reused");
        }
      } else if (!g.outcome.empty()) {
        add(CircuitViolationKind::MissingOutcome, si, g.qubits[0], "outcome id on a non-measurement gate");
      }
      for (int q : g.qubits) {
        auto it = index.find(q);
        if (it == index.end()) {
          add(CircuitViolationKind::UnknownQubit, si, q, "gate references undeclared qubit");
          continue;
        }
        if (!used.insert(q).second) {
          add(CircuitViolationKind::OverlappingSlice, si, q, "qubit used by two gates in one slice");
        }
        WireState &ws = state[it->second];
        if (is_prep(g.kind)) {
          if (ws != WireState::Fresh) {
            add(CircuitViolationKind::PrepAfterUse, si, q, "preparation on a qubit that is already live or measured");
          }
          ws = WireState::Live;
          continue;
        }
        if (ws == WireState::Fresh) {
          add(CircuitViolationKind::UseBeforePrep, si, q, std::string(gate_name(g.kind)) + " before preparation");
        } else if (ws == WireState::Measured) {
          add(CircuitViolationKind::UseAfterMeasure, si, q, std::string(gate_name(g.kind)) + " after measurement");
        }
        if (is_measurement(g.kind)) {
          ws = WireState::Measured;
        }
      }
    }
  }
  int end = static_cast<int>(c.slices.size());
  for (size_t k = 0; k < c.qubits.size(); k++) {
    const QubitDecl &q = c.qubits[k];
    if (state[k] == WireState::Live && !q.open_output) {
      add(CircuitViolationKind::DanglingWire, end, q.id, "live qubit is neither measured nor an open output");
    } else if (state[k] != WireState::Live && q.open_output) {
      add(CircuitViolationKind::DanglingWire, end, q.id, "open output on a qubit that is not live at the end");
    }
  }
  return out;
}

std::vector<int> output_qubits(const CliffordCircuit &c) {
  std::vector<int> out;
  for (const auto &q : c.qubits) {
    if (q.open_output) {
      out.push_back(q.id);
    }
  }
  return out;
}

Lowered lower_to_zx(const CliffordCircuit &c) {
  require_valid(c);
  Lowered res;
  ZxDiagram &zx = res.diagram;
  LegMap &legs = res.legs;

  struct Wire {
    bool live = false;
    NodeId end;
    bool pending_h = false;
    std::vector<std::pair<int, bool>> crossings;
  };
  std::vector<Wire> wires(c.qubits.size());
  auto index = index_map(c);

  for (size_t k = 0; k < c.qubits.size(); k++) {
    const QubitDecl &q = c.qubits[k];
    if (q.open_input) {
      NodeId n = zx.add_node(Boundary{BoundaryDirection::In}, NodeRole::BoundaryLeg, NodeTag{q.id, -1});
      legs.input_leg[q.id] = n;
      legs.qubit_of[n] = q.id;
      wires[k].live = true;
      wires[k].end = n;
    }
  }

  // Joins the wire's open end to `n`, closing every boundary it crossed.
  auto attach = [&](size_t k, NodeId n) {
    Wire &w = wires[k];
    EdgeId e = zx.add_edge(w.end, n, w.pending_h);
    for (auto [boundary, swapped] : w.crossings) {
      legs.wires[{c.qubits[k].id, boundary}] = WireRef{e, swapped};
    }
    w.crossings.clear();
    w.pending_h = false;
    w.end = n;
  };

  for (size_t s = 0; s < c.slices.size(); s++) {
    int si = static_cast<int>(s);
    for (size_t k = 0; k < wires.size(); k++) {
      if (wires[k].live) {
        wires[k].crossings.emplace_back(si, wires[k].pending_h);
      }
    }
    for (const Gate &g : c.slices[s]) {
      size_t a = index.at(g.qubits[0]);
      NodeTag tag{g.qubits[0], si};
      switch (g.kind) {
        case GateKind::PrepX:
        case GateKind::PrepZ: {
          Spider sp = g.kind == GateKind::PrepX ? Spider::z() : Spider::x();
          NodeId n = zx.add_node(sp, NodeRole::Prep, tag);
          legs.prep_of[n] = g.kind;
          legs.qubit_of[n] = g.qubits[0];
          wires[a].live = true;
          wires[a].end = n;
          break;
        }
        case GateKind::MeasX:
        case GateKind::MeasZ: {
          Spider sp = g.kind == GateKind::MeasX ? Spider::z() : Spider::x();
          NodeId n = zx.add_node(sp, NodeRole::Measure, tag, g.outcome);
          legs.outcome_of[n] = g.outcome;
          legs.qubit_of[n] = g.qubits[0];
          attach(a, n);
          wires[a].live = false;
          break;
        }
        case GateKind::H:
          wires[a].pending_h = !wires[a].pending_h;
          break;
        case GateKind::S:
        case GateKind::Sdg:
          attach(a, zx.add_node(Spider::z(g.kind == GateKind::S ? 1 : -1), NodeRole::Internal, tag));
          break;
        case GateKind::CNOT:
        case GateKind::CZ: {
          size_t b = index.at(g.qubits[1]);
          NodeId na = zx.add_node(Spider::z(), NodeRole::Internal, tag);
          NodeId nb = zx.add_node(g.kind == GateKind::CNOT ? Spider::x() : Spider::z(), NodeRole::Internal,
                                  NodeTag{g.qubits[1], si});
          attach(a, na);
          attach(b, nb);
          zx.add_edge(na, nb, g.kind == GateKind::CZ);
          break;
        }
      }
    }
  }

  int end = static_cast<int>(c.slices.size());
  for (size_t k = 0; k < wires.size(); k++) {
    if (!wires[k].live) {
      continue;
    }
    wires[k].crossings.emplace_back(end, wires[k].pending_h);
    const QubitDecl &q = c.qubits[k];
    NodeId n = zx.add_node(Boundary{BoundaryDirection::Out}, NodeRole::BoundaryLeg, NodeTag{q.id, end});
    legs.output_leg[q.id] = n;
    legs.qubit_of[n] = q.id;
    attach(k, n);
  }
  return res;
}

PropagationResult propagate_pauli(const CliffordCircuit &c, const PauliString &placement) {
  require_valid(c);
  size_t n = c.qubits.size();
  if (placement.size() != n) {
    throw ShapeError("placement has " + std::to_string(placement.size()) + " qubits, circuit has " +
                     std::to_string(n));
  }
  auto index = index_map(c);
  PauliString cur(n);
  cur.phase = placement.phase;
  std::vector<bool> consumed(n, false);
  for (size_t k = 0; k < n; k++) {
    if (c.qubits[k].open_input) {
      cur.set(k, placement.get(k));
      consumed[k] = true;
    }
  }

  PropagationResult res;
  std::vector<size_t> targets;
  for (const auto &slice : c.slices) {
    for (const Gate &g : slice) {
      targets.clear();
      for (int q : g.qubits) {
        targets.push_back(index.at(q));
      }
      size_t a = targets[0];
      if (is_prep(g.kind)) {
        Pauli want = placement.get(a);
        if (want != Pauli::I && want != gate_basis(g.kind)) {
          throw UnsupportedPlacement(std::string(1, pauli_char(want)) + " placed on qubit " +
                                     std::to_string(g.qubits[0]) + " does not stabilize its " +
                                     std::string(gate_name(g.kind)));
        }
        cur.set(a, want);
        consumed[a] = true;
      } else if (is_measurement(g.kind)) {
        Pauli here = cur.get(a);
        if (here == Pauli::I) {
          continue;
        }
        if (here != gate_basis(g.kind)) {
          throw AnticommutesWithMeasurement(std::string(1, pauli_char(here)) + " reaches " +
                                            std::string(gate_name(g.kind)) + " on qubit " +
                                            std::to_string(g.qubits[0]) + " (outcome " + g.outcome + ")");
        }
        cur.set(a, Pauli::I);
        res.outcome_support.push_back(g.outcome);
      } else {
        conjugate(cur, g.kind, targets);
      }
    }
  }
  for (size_t k = 0; k < n; k++) {
    if (!consumed[k] && placement.get(k) != Pauli::I) {
      throw UnsupportedPlacement("qubit " + std::to_string(c.qubits[k].id) +
                                 " is neither an open input nor prepared");
    }
  }

  res.output_qubits = output_qubits(c);
  res.final = PauliString(res.output_qubits.size());
  res.final.phase = cur.phase;
  for (size_t k = 0; k < res.output_qubits.size(); k++) {
    res.final.set(k, cur.get(index.at(res.output_qubits[k])));
  }
  return res;
}

ClosedCircuit close_open_inputs(const CliffordCircuit &c) {
  ClosedCircuit res;
  res.circuit = c;
  int next_id = 0;
  for (const auto &q : c.qubits) {
    next_id = std::max(next_id, q.id + 1);
  }
  TimeSlice preps;
  TimeSlice entangle;
  for (auto &q : res.circuit.qubits) {
    if (!q.open_input) {
      continue;
    }
    q.open_input = false;
    int ref = next_id++;
    res.reference_of[q.id] = ref;
    preps.push_back(Gate::prep_x(ref));
    preps.push_back(Gate::prep_z(q.id));
    entangle.push_back(Gate::cnot(ref, q.id));
  }
  if (res.reference_of.empty()) {
    return res;
  }
  for (const auto &[orig, ref] : res.reference_of) {
    const QubitDecl &src = c.qubit(orig);
    res.circuit.qubits.push_back(QubitDecl{ref, QubitRole::Data, src.row, src.col, false, true});
  }
  res.circuit.slices.insert(res.circuit.slices.begin(), {std::move(preps), std::move(entangle)});
  return res;
}

long outcome_number(const std::string &outcome) {
  if (outcome.size() < 2 || outcome[0] != 'm') {
    return -1;
  }
  long v = 0;
  for (size_t k = 1; k < outcome.size(); k++) {
    if (outcome[k] < '0' || outcome[k] > '9') {
      return -1;
    }
    v = v * 10 + (outcome[k] - '0');
  }
  return v;
}

void sort_outcomes(std::vector<std::string> &outcomes) {
  std::sort(outcomes.begin(), outcomes.end(), [](const std::string &a, const std::string &b) {
    long na = outcome_number(a);
    long nb = outcome_number(b);
    if ((na < 0) != (nb < 0)) {
      return na >= 0;
    }
    if (na != nb) {
      return na < nb;
    }
    return a < b;
  });
}

}  // namespace foldweb
