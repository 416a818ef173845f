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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foldweb/circuit.hpp"
#include "foldweb/gf2.hpp"
#include "foldweb/pauli.hpp"
#include "foldweb/zx.hpp"

namespace foldweb {

/// A Pauli label on every edge of a host diagram, stored as seen from the
/// edge's first endpoint (smaller node id). Unlisted edges are I.
class PauliWeb {
 public:
  PauliWeb() = default;
  explicit PauliWeb(size_t num_edges) : labels_(num_edges, Pauli::I) {}

  size_t size() const { return labels_.size(); }
  Pauli label(EdgeId e) const { return labels_.at(e.value); }
  void set(EdgeId e, Pauli p) { labels_.at(e.value) = p; }
  const std::vector<Pauli> &labels() const { return labels_; }
  bool empty() const;

  /// Edge-wise XOR, which keeps valid webs valid.
  PauliWeb &operator^=(const PauliWeb &other);
  bool operator==(const PauliWeb &) const = default;

  /// Packs the labels as variables (x_e at 2e, z_e at 2e+1).
  BitVec to_bits() const;
  static PauliWeb from_bits(const BitVec &bits);

 private:
  std::vector<Pauli> labels_;
};

/// Label of edge `e` as seen from endpoint `at`: the stored label, swapped
/// across a Hadamard edge when `at` is the second endpoint.
Pauli half_edge_label(const ZxDiagram &zx, const PauliWeb &web, EdgeId e, NodeId at);

enum class ConstraintKind : uint8_t { AllEqual, Parity };

const char *constraint_name(ConstraintKind kind);

struct Gf2System {
  /// Columns are 2*|edges| variables: x_e at 2e, z_e at 2e+1.
  Gf2Matrix matrix;
  struct RowOrigin {
    NodeId spider;
    ConstraintKind kind;
  };
  std::vector<RowOrigin> rows;
  size_t num_edges = 0;
};

/// Spider constraints as a homogeneous GF(2) system. For a Z spider of phase
/// a with incident half-edge labels (x_i, z_i): every x_i equals a common
/// x, and sum z_i = a*x (mod 2). X spiders swap the roles of x and z.
/// Boundary nodes are unconstrained.
Gf2System build_system(const ZxDiagram &zx);

/// Labels fixed on the single edge of degree-1 nodes (boundary legs,
/// measurements, preparations), as seen from that node.
using WebPins = std::map<NodeId, Pauli>;

/// Any web satisfying the constraints and pins, with free variables zero, or
/// nullopt when none exists. Throws NotFound for a pin on a node that is not a
/// degree-1 leg.
std::optional<PauliWeb> solve(const ZxDiagram &zx, const Gf2System &system, const WebPins &pins);

/// Basis of all webs, canonical (reduced echelon, pivots ascending).
std::vector<PauliWeb> web_basis(const ZxDiagram &zx);
std::vector<PauliWeb> web_basis(const ZxDiagram &zx, const Gf2System &system);

struct WebViolation {
  NodeId spider;
  ConstraintKind kind;
};

/// Evaluates each spider's rules directly on half-edge labels, without the
/// matrix. Empty means valid.
std::vector<WebViolation> check_web(const ZxDiagram &zx, const PauliWeb &web);

/// Edges that could explain a set of violations: every spider endpoint of
/// the edge is violated.
std::vector<EdgeId> suspect_edges(const ZxDiagram &zx, const std::vector<WebViolation> &violations);

struct BoundarySignature {
  /// Qubit id -> Pauli at the input / output legs (I entries omitted).
  std::map<int, Pauli> inputs;
  std::map<int, Pauli> outputs;
  /// Outcomes whose measurement leg carries the measured basis, sorted.
  std::vector<std::string> measurement_support;
  /// Prep nodes absorbing the web.
  std::vector<NodeId> prep_anchors;

  bool operator==(const BoundarySignature &) const = default;
};

/// Reads the web at the diagram's legs. Throws WebInvalid if the web breaks a
/// spider rule.
BoundarySignature boundary_signature(const ZxDiagram &zx, const LegMap &legs, const PauliWeb &web);

/// Pins every leg in `side` (LegMap::input_leg or output_leg): the leg of
/// qubits[k] gets pauli[k], legs of qubits not listed get I.
void pin_legs(WebPins &pins, const std::map<int, NodeId> &side, const std::vector<int> &qubits,
              const PauliString &pauli);

/// The signature's outputs as a Pauli string over `qubits`, phase 0.
PauliString signature_pauli(const std::map<int, Pauli> &side, const std::vector<int> &qubits);

}  // namespace foldweb
