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

#include "foldweb/clifford.hpp"

#include <stdexcept>
#include <string>

#include "foldweb/errors.hpp"

namespace foldweb {

namespace {

constexpr GeneratorImage img(Pauli a, Pauli b = Pauli::I, bool negative = false) { return {{a, b}, negative}; }

constexpr ConjugationRule kH{1, {img(Pauli::Z), img(Pauli::X), img(Pauli::I), img(Pauli::I)}};
constexpr ConjugationRule kS{1, {img(Pauli::Y), img(Pauli::Z), img(Pauli::I), img(Pauli::I)}};
constexpr ConjugationRule kSdg{1, {img(Pauli::Y, Pauli::I, true), img(Pauli::Z), img(Pauli::I), img(Pauli::I)}};
// Control first, target second.
constexpr ConjugationRule kCnot{2, {img(Pauli::X, Pauli::X), img(Pauli::Z, Pauli::I), img(Pauli::I, Pauli::X), img(Pauli::Z, Pauli::Z)}};
constexpr ConjugationRule kCz{2, {img(Pauli::X, Pauli::Z), img(Pauli::Z, Pauli::I), img(Pauli::Z, Pauli::X), img(Pauli::I, Pauli::Z)}};

PauliString image_string(const GeneratorImage &g, size_t arity) {
  PauliString out(arity);
  for (size_t k = 0; k < arity; k++) {
    out.set(k, g.paulis[k]);
  }
  out.phase = g.negative ? 2 : 0;
  return out;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::PrepZ:
      return "prep_z";
    case GateKind::PrepX:
      return "prep_x";
    case GateKind::H:
      return "h";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::CNOT:
      return "cnot";
    case GateKind::CZ:
      return "cz";
    case GateKind::MeasX:
      return "meas_x";
    case GateKind::MeasZ:
      return "meas_z";
  }
  return "?";
}

GateKind gate_from_name(std::string_view name) {
  for (GateKind k : {GateKind::PrepZ, GateKind::PrepX, GateKind::H, GateKind::S, GateKind::Sdg, GateKind::CNOT,
                     GateKind::CZ, GateKind::MeasX, GateKind::MeasZ}) {
    if (gate_name(k) == name) {
      return k;
    }
  }
  throw SchemaError("unknown gate '" + std::string(name) + "' (only Clifford gates prep_z, prep_x, h, s, sdg, cnot, cz, meas_x, meas_z are supported)");
}

size_t gate_arity(GateKind kind) { return (kind == GateKind::CNOT || kind == GateKind::CZ) ? 2 : 1; }

bool is_unitary(GateKind kind) { return !is_prep(kind) && !is_measurement(kind); }
bool is_prep(GateKind kind) { return kind == GateKind::PrepX || kind == GateKind::PrepZ; }
bool is_measurement(GateKind kind) { return kind == GateKind::MeasX || kind == GateKind::MeasZ; }

Pauli gate_basis(GateKind kind) {
  switch (kind) {
    case GateKind::PrepX:
    case GateKind::MeasX:
      return Pauli::X;
    case GateKind::PrepZ:
    case GateKind::MeasZ:
      return Pauli::Z;
    default:
      throw std::invalid_argument("gate has no basis: " + std::string(gate_name(kind)));
  }
}

const ConjugationRule &conjugation_rule(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return kH;
    case GateKind::S:
      return kS;
    case GateKind::Sdg:
      return kSdg;
    case GateKind::CNOT:
      return kCnot;
    case GateKind::CZ:
      return kCz;
    default:
      throw std::invalid_argument("no conjugation rule for non-unitary gate " + std::string(gate_name(kind)));
  }
}

void conjugate(PauliString &p, GateKind kind, std::span<const size_t> targets) {
  const ConjugationRule &rule = conjugation_rule(kind);
  if (targets.size() != rule.arity) {
    throw std::invalid_argument("wrong number of targets for " + std::string(gate_name(kind)));
  }
  // Each local factor is i^{xz} X^x Z^z; replace X and Z by their images and
  // multiply in the same order.
  PauliString acc(rule.arity);
  int extra = 0;
  for (size_t k = 0; k < rule.arity; k++) {
    bool x = p.xs.get(targets[k]);
    bool z = p.zs.get(targets[k]);
    if (x && z) {
      extra += 1;
    }
    if (x) {
      acc *= image_string(rule.images[2 * k], rule.arity);
    }
    if (z) {
      acc *= image_string(rule.images[2 * k + 1], rule.arity);
    }
  }
  for (size_t k = 0; k < rule.arity; k++) {
    p.set(targets[k], acc.get(k));
  }
  p.phase = static_cast<uint8_t>((p.phase + acc.phase + extra) & 3);
}

}  // namespace foldweb
