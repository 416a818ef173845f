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

#include "foldweb/lattice.hpp"

#include <array>
#include <string>

#include "foldweb/errors.hpp"

namespace foldweb {

namespace {

// Corner offsets from the lower-left data qubit of a plaquette.
constexpr Coord kNW{1, 0};
constexpr Coord kNE{1, 1};
constexpr Coord kSW{0, 0};
constexpr Coord kSE{0, 1};

// With these orders the half-round state is invariant under the fold layer.
constexpr std::array<Coord, 4> kXOrder{kNW, kSW, kNE, kSE};
constexpr std::array<Coord, 4> kZOrder{kNW, kNE, kSW, kSE};

void require_distance(int d) {
  if (d < 3 || d % 2 == 0) {
    throw OddDistanceRequired("distance must be odd and >= 3, got " + std::to_string(d));
  }
}

// CNOT step `step` (0..3) for plaquettes of `type`, with ancilla ids shifted
// by `id_offset`. Plaquettes missing the scheduled corner idle.
void append_cnots(const Lattice &lat, Pauli type, size_t step, int id_offset, TimeSlice &out) {
  const auto &order = type == Pauli::X ? kXOrder : kZOrder;
  for (const Plaquette &p : lat.plaquettes()) {
    if (p.type != type) {
      continue;
    }
    Coord q{p.corner.row + order[step].row, p.corner.col + order[step].col};
    if (!lat.contains(q)) {
      continue;
    }
    int data = lat.data_id(q);
    int anc = p.ancilla + id_offset;
    out.push_back(type == Pauli::X ? Gate::cnot(anc, data) : Gate::cnot(data, anc));
  }
}

std::string outcome_name(int k) { return "m" + std::to_string(k); }

QubitDecl shifted(QubitDecl q, int id_offset) {
  q.id += id_offset;
  return q;
}

CliffordCircuit sequential_rounds(int d, int rounds, std::optional<Pauli> data_basis) {
  require_distance(d);
  if (rounds < 1) {
    throw std::invalid_argument("rounds must be >= 1");
  }
  Lattice lat = build_lattice(d);
  CliffordCircuit c;
  c.distance = d;
  bool open = !data_basis.has_value();
  auto decls = lat.qubit_decls(open, true);
  int n_data = d * d;
  int n_anc = d * d - 1;
  for (int k = 0; k < n_data; k++) {
    c.qubits.push_back(decls[k]);
  }
  int outcome = 0;
  for (int r = 0; r < rounds; r++) {
    int offset = r * n_anc;
    for (int k = 0; k < n_anc; k++) {
      c.qubits.push_back(shifted(decls[n_data + k], offset));
    }
    TimeSlice prep;
    if (r == 0 && data_basis) {
      for (int q = 0; q < n_data; q++) {
        prep.push_back(*data_basis == Pauli::X ? Gate::prep_x(q) : Gate::prep_z(q));
      }
    }
    for (const Plaquette &p : lat.plaquettes()) {
      prep.push_back(p.type == Pauli::X ? Gate::prep_x(p.ancilla + offset) : Gate::prep_z(p.ancilla + offset));
    }
    c.slices.push_back(std::move(prep));
    for (Pauli type : {Pauli::Z, Pauli::X}) {
      for (size_t step = 0; step < 4; step++) {
        TimeSlice s;
        append_cnots(lat, type, step, offset, s);
        c.slices.push_back(std::move(s));
      }
      TimeSlice meas;
      for (const Plaquette &p : lat.plaquettes()) {
        if (p.type != type) {
          continue;
        }
        int anc = p.ancilla + offset;
        meas.push_back(type == Pauli::X ? Gate::meas_x(anc, outcome_name(outcome))
                                        : Gate::meas_z(anc, outcome_name(outcome)));
        outcome++;
      }
      c.slices.push_back(std::move(meas));
    }
  }
  return c;
}

}  // namespace

int Lattice::data_id(Coord c) const {
  if (!contains(c)) {
    throw NotFound("coordinate (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") is outside the lattice");
  }
  return c.row * d_ + c.col;
}

std::optional<size_t> Lattice::mirror_plaquette(size_t k) const {
  Coord target{plaquettes_.at(k).corner.col, plaquettes_.at(k).corner.row};
  for (size_t j = 0; j < plaquettes_.size(); j++) {
    if (plaquettes_[j].corner == target) {
      return j;
    }
  }
  return std::nullopt;
}

std::vector<QubitDecl> Lattice::qubit_decls(bool data_open_input, bool data_open_output) const {
  std::vector<QubitDecl> out;
  for (const Coord &c : data_) {
    out.push_back(QubitDecl{data_id(c), QubitRole::Data, 2 * c.row, 2 * c.col, data_open_input, data_open_output});
  }
  for (const Plaquette &p : plaquettes_) {
    out.push_back(QubitDecl{p.ancilla, p.type == Pauli::X ? QubitRole::AncillaX : QubitRole::AncillaZ,
                            2 * p.corner.row + 1, 2 * p.corner.col + 1, false, false});
  }
  return out;
}

Lattice build_lattice(int d) {
  require_distance(d);
  Lattice lat;
  lat.d_ = d;
  for (int r = 0; r < d; r++) {
    for (int c = 0; c < d; c++) {
      lat.data_.push_back({r, c});
    }
  }
  for (int i = -1; i < d; i++) {
    for (int j = -1; j < d; j++) {
      Pauli type = (i + j) % 2 == 0 ? Pauli::Z : Pauli::X;
      std::vector<Coord> support;
      for (Coord off : {kSW, kSE, kNW, kNE}) {
        Coord q{i + off.row, j + off.col};
        if (lat.contains(q)) {
          support.push_back(q);
        }
      }
      if (support.size() < 2) {
        continue;
      }
      if (support.size() == 2) {
        bool side = j == -1 || j == d - 1;
        if (side != (type == Pauli::X)) {
          continue;
        }
      }
      int id = d * d + static_cast<int>(lat.plaquettes_.size());
      lat.plaquettes_.push_back(Plaquette{type, {i, j}, std::move(support), id});
    }
  }
  return lat;
}

Coord mirror(const Lattice &lattice, Coord c) {
  if (!lattice.contains(c)) {
    throw NotFound("coordinate (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") is outside the lattice");
  }
  return {c.col, c.row};
}

TimeSlice fold_layer(const Lattice &lattice) {
  TimeSlice out;
  for (const Coord &c : lattice.data()) {
    int a = lattice.data_id(c);
    int b = lattice.data_id(mirror(lattice, c));
    if (a < b) {
      out.push_back(Gate::cz(a, b));
    }
  }
  for (const Coord &c : lattice.data()) {
    if (c.row == c.col) {
      out.push_back(Gate::s(lattice.data_id(c)));
    }
  }
  const auto &pl = lattice.plaquettes();
  for (size_t k = 0; k < pl.size(); k++) {
    if (!pl[k].interior()) {
      continue;
    }
    auto m = lattice.mirror_plaquette(k);
    if (m && *m > k) {
      out.push_back(Gate::cz(pl[k].ancilla, pl[*m].ancilla));
    }
  }
  for (const Plaquette &p : pl) {
    if (p.interior() && p.corner.row == p.corner.col) {
      out.push_back(Gate::sdg(p.ancilla));
    }
  }
  return out;
}

std::vector<TimeSlice> syndrome_round_slices(const Lattice &lattice, RoundPhase phase) {
  size_t begin = phase == RoundPhase::SecondHalf ? 2 : 0;
  size_t end = phase == RoundPhase::FirstHalf ? 2 : 4;
  std::vector<TimeSlice> out;
  for (size_t step = begin; step < end; step++) {
    TimeSlice s;
    append_cnots(lattice, Pauli::X, step, 0, s);
    append_cnots(lattice, Pauli::Z, step, 0, s);
    out.push_back(std::move(s));
  }
  return out;
}

CliffordCircuit cclp_y_init_circuit(int d) {
  Lattice lat = build_lattice(d);
  CliffordCircuit c;
  c.distance = d;
  c.qubits = lat.qubit_decls(false, true);

  TimeSlice prep;
  for (const Coord &q : lat.data()) {
    prep.push_back(Gate::prep_x(lat.data_id(q)));
  }
  for (const Plaquette &p : lat.plaquettes()) {
    prep.push_back(p.type == Pauli::X ? Gate::prep_x(p.ancilla) : Gate::prep_z(p.ancilla));
  }
  c.slices.push_back(std::move(prep));
  for (auto &s : syndrome_round_slices(lat, RoundPhase::FirstHalf)) {
    c.slices.push_back(std::move(s));
  }
  c.slices.push_back(fold_layer(lat));
  for (auto &s : syndrome_round_slices(lat, RoundPhase::SecondHalf)) {
    c.slices.push_back(std::move(s));
  }
  TimeSlice meas;
  int k = 0;
  for (const Plaquette &p : lat.plaquettes()) {
    meas.push_back(p.type == Pauli::X ? Gate::meas_x(p.ancilla, outcome_name(k)) : Gate::meas_z(p.ancilla, outcome_name(k)));
    k++;
  }
  c.slices.push_back(std::move(meas));
  return c;
}

CliffordCircuit encoder_circuit(int d, int rounds) { return sequential_rounds(d, rounds, std::nullopt); }

CliffordCircuit transversal_init_circuit(int d, Pauli basis, int rounds) {
  if (basis != Pauli::X && basis != Pauli::Z) {
    throw std::invalid_argument("transversal init basis must be X or Z");
  }
  return sequential_rounds(d, rounds, basis);
}

PauliString logical_rep(const Lattice &lattice, Pauli which) {
  int d = lattice.distance();
  PauliString out(static_cast<size_t>(d * d));
  if (x_bit(which)) {
    for (int c = 0; c < d; c++) {
      out.xs.set(lattice.data_id({d - 1, c}), true);
    }
  }
  if (z_bit(which)) {
    for (int r = 0; r < d; r++) {
      out.zs.set(lattice.data_id({r, d - 1}), true);
    }
  }
  return out;
}

PauliString plaquette_operator(const Lattice &lattice, size_t k) {
  const Plaquette &p = lattice.plaquettes().at(k);
  int d = lattice.distance();
  PauliString out(static_cast<size_t>(d * d));
  for (const Coord &c : p.support) {
    out.set(lattice.data_id(c), p.type);
  }
  return out;
}

}  // namespace foldweb
