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

#include <compare>
#include <optional>
#include <vector>

#include "foldweb/circuit.hpp"
#include "foldweb/pauli.hpp"

namespace foldweb {

/// Data-qubit position. Rows grow upward, columns rightward; the logical X
/// representative is the top row and logical Z the rightmost column.
struct Coord {
  int row = 0;
  int col = 0;
  auto operator<=>(const Coord &) const = default;
};

struct Plaquette {
  /// Pauli::X or Pauli::Z.
  Pauli type = Pauli::Z;
  /// Data coordinate of the lower-left corner; may be -1 for boundary
  /// plaquettes. The centre sits at (corner + 1/2).
  Coord corner;
  /// Data qubits in the support (2 or 4).
  std::vector<Coord> support;
  /// Qubit id of the measuring ancilla.
  int ancilla = 0;

  bool interior() const { return support.size() == 4; }
};

/// Distance-d rotated surface code. Plaquettes on the main diagonal are
/// Z-type, weight-2 X plaquettes sit on the left/right boundaries and weight-2
/// Z plaquettes on the top/bottom boundaries.
///
/// Qubit ids: data (r, c) is r*d + c, the ancilla of plaquette k is d*d + k.
class Lattice {
 public:
  int distance() const { return d_; }
  const std::vector<Coord> &data() const { return data_; }
  const std::vector<Plaquette> &plaquettes() const { return plaquettes_; }

  bool contains(Coord c) const { return c.row >= 0 && c.row < d_ && c.col >= 0 && c.col < d_; }
  /// Throws NotFound outside the lattice.
  int data_id(Coord c) const;
  /// Index of the plaquette whose centre is the transpose of plaquette k's
  /// centre, if that site hosts a plaquette.
  std::optional<size_t> mirror_plaquette(size_t k) const;

  /// Declarations for data then ancillas, in id order.
  std::vector<QubitDecl> qubit_decls(bool data_open_input, bool data_open_output) const;

 private:
  friend Lattice build_lattice(int d);
  int d_ = 0;
  std::vector<Coord> data_;
  std::vector<Plaquette> plaquettes_;
};

/// Throws OddDistanceRequired unless d is odd and at least 3.
Lattice build_lattice(int d);

/// Transpose across the main diagonal. Throws NotFound outside the lattice.
Coord mirror(const Lattice &lattice, Coord c);

/// CZ between every mirrored pair of data qubits, S on the diagonal data,
/// CZ between mirrored interior ancillas, S^dag on the diagonal ancillas.
/// Boundary ancillas get nothing.
TimeSlice fold_layer(const Lattice &lattice);

enum class RoundPhase { FirstHalf, SecondHalf, Full };

/// Four CNOT slices touching every plaquette's support once each. X ancillas
/// control (visiting NW, SW, NE, SE); Z ancillas are targets (visiting NW, NE,
/// SW, SE). The first half covers slices 1-2, the second half 3-4.
std::vector<TimeSlice> syndrome_round_slices(const Lattice &lattice, RoundPhase phase);

/// Seven slices: prep (data in |+>), first half round, fold layer, second
/// half round, ancilla measurement. Data qubits are open outputs.
CliffordCircuit cclp_y_init_circuit(int d);

/// `rounds` rounds of Z-type then X-type plaquette measurement on open data.
/// Each round uses fresh ancillas.
CliffordCircuit encoder_circuit(int d, int rounds);

/// Like the encoder, with the data prepared in `basis` (Pauli::Z or Pauli::X)
/// instead of open inputs.
CliffordCircuit transversal_init_circuit(int d, Pauli basis, int rounds = 1);

/// Logical representative over the d*d data qubits (index r*d + c):
/// X on the top row, Z on the right column, and Y = their product with a Y on
/// the top-right corner. Phase 0.
PauliString logical_rep(const Lattice &lattice, Pauli which);

/// Plaquette k's operator over the data qubits.
PauliString plaquette_operator(const Lattice &lattice, size_t k);

}  // namespace foldweb
