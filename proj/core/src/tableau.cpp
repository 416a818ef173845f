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

#include "foldweb/tableau.hpp"

#include <stdexcept>

#include "foldweb/errors.hpp"

namespace foldweb {

namespace {

void flip_sign(PauliString &p) { p.phase ^= 2; }

// Gaussian elimination with sign-tracked products; returns the rows left in
// echelon form together with their pivot columns (x bits first, then z).
struct Echelon {
  std::vector<PauliString> rows;
  std::vector<size_t> pivots;
};

bool column_bit(const PauliString &p, size_t col) {
  size_t n = p.size();
  return col < n ? p.xs.get(col) : p.zs.get(col - n);
}

Echelon echelon(std::vector<PauliString> rows) {
  Echelon out;
  if (rows.empty()) {
    return out;
  }
  size_t n = rows.front().size();
  size_t next = 0;
  for (size_t col = 0; col < 2 * n && next < rows.size(); col++) {
    size_t found = next;
    while (found < rows.size() && !column_bit(rows[found], col)) {
      found++;
    }
    if (found == rows.size()) {
      continue;
    }
    std::swap(rows[found], rows[next]);
    for (size_t r = 0; r < rows.size(); r++) {
      if (r != next && column_bit(rows[r], col)) {
        rows[r] *= rows[next];
      }
    }
    out.pivots.push_back(col);
    next++;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

}  // namespace

bool StabTableau::check_invariants() const {
  for (const auto &g : generators) {
    if (g.size() != qubits.size() || (g.phase & 1)) {
      return false;
    }
  }
  for (size_t a = 0; a < generators.size(); a++) {
    for (size_t b = a + 1; b < generators.size(); b++) {
      if (!generators[a].commutes(generators[b])) {
        return false;
      }
    }
  }
  return echelon(generators).rows.size() == generators.size();
}

ContainsResult contains_pauli(const StabTableau &t, const PauliString &p) {
  if (p.size() != t.num_qubits()) {
    throw ShapeError("Pauli over " + std::to_string(p.size()) + " qubits, tableau over " +
                     std::to_string(t.num_qubits()));
  }
  for (const auto &g : t.generators) {
    if (!p.commutes(g)) {
      return {Membership::AntiCommutes, 0};
    }
  }
  Echelon e = echelon(t.generators);
  PauliString residual = p;
  for (size_t k = 0; k < e.rows.size(); k++) {
    if (column_bit(residual, e.pivots[k])) {
      residual *= e.rows[k];
    }
  }
  if (!residual.is_identity()) {
    return {Membership::IndependentCommuting, 0};
  }
  // p * prod(g) = c  =>  prod(g) = c * p.
  return {Membership::InGroup, residual.sign()};
}

std::optional<bool> OutcomeRecord::bit(const std::string &id) const {
  for (const auto &e : entries) {
    if (e.id == id) {
      return e.bit;
    }
  }
  return std::nullopt;
}

std::map<std::string, bool> OutcomeRecord::bits() const {
  std::map<std::string, bool> out;
  for (const auto &e : entries) {
    out[e.id] = e.bit;
  }
  return out;
}

TableauSimulator::TableauSimulator(size_t num_qubits) : n_(num_qubits), rows_(2 * num_qubits, PauliString(num_qubits)) {
  for (size_t k = 0; k < n_; k++) {
    rows_[k].xs.set(k, true);
    rows_[n_ + k].zs.set(k, true);
  }
}

void TableauSimulator::h(size_t q) {
  for (auto &r : rows_) {
    bool x = r.xs.get(q);
    bool z = r.zs.get(q);
    if (x && z) {
      flip_sign(r);
    }
    r.xs.set(q, z);
    r.zs.set(q, x);
  }
}

void TableauSimulator::s(size_t q) {
  for (auto &r : rows_) {
    bool x = r.xs.get(q);
    bool z = r.zs.get(q);
    if (x && z) {
      flip_sign(r);
    }
    r.zs.set(q, z ^ x);
  }
}

void TableauSimulator::sdg(size_t q) {
  for (auto &r : rows_) {
    bool x = r.xs.get(q);
    bool z = r.zs.get(q) ^ x;
    if (x && z) {
      flip_sign(r);
    }
    r.zs.set(q, z);
  }
}

void TableauSimulator::cnot(size_t c, size_t t) {
  for (auto &r : rows_) {
    bool xc = r.xs.get(c);
    bool zc = r.zs.get(c);
    bool xt = r.xs.get(t);
    bool zt = r.zs.get(t);
    if (xc && zt && !(xt ^ zc)) {
      flip_sign(r);
    }
    r.xs.set(t, xt ^ xc);
    r.zs.set(c, zc ^ zt);
  }
}

void TableauSimulator::cz(size_t a, size_t b) {
  for (auto &r : rows_) {
    bool xa = r.xs.get(a);
    bool za = r.zs.get(a);
    bool xb = r.xs.get(b);
    bool zb = r.zs.get(b);
    if (xa && xb && (za ^ zb)) {
      flip_sign(r);
    }
    r.zs.set(a, za ^ xb);
    r.zs.set(b, zb ^ xa);
  }
}

void TableauSimulator::apply(GateKind kind, std::span<const size_t> t) {
  switch (kind) {
    case GateKind::H:
      h(t[0]);
      break;
    case GateKind::S:
      s(t[0]);
      break;
    case GateKind::Sdg:
      sdg(t[0]);
      break;
    case GateKind::CNOT:
      cnot(t[0], t[1]);
      break;
    case GateKind::CZ:
      cz(t[0], t[1]);
      break;
    default:
      throw std::invalid_argument("TableauSimulator::apply takes unitary gates only");
  }
}

void TableauSimulator::rowsum(size_t target, size_t source) {
  PauliString product = rows_[source];
  product *= rows_[target];
  rows_[target] = std::move(product);
}

bool TableauSimulator::is_deterministic_z(size_t q) const {
  for (size_t k = 0; k < n_; k++) {
    if (rows_[n_ + k].xs.get(q)) {
      return false;
    }
  }
  return true;
}

bool TableauSimulator::measure_z(size_t q, std::optional<bool> forced, std::mt19937_64 &rng, bool &deterministic) {
  size_t p = 2 * n_;
  for (size_t k = n_; k < 2 * n_; k++) {
    if (rows_[k].xs.get(q)) {
      p = k;
      break;
    }
  }
  if (p == 2 * n_) {
    deterministic = true;
    PauliString scratch(n_);
    for (size_t k = 0; k < n_; k++) {
      if (rows_[k].xs.get(q)) {
        scratch *= rows_[n_ + k];
      }
    }
    return scratch.sign() < 0;
  }
  deterministic = false;
  for (size_t k = 0; k < 2 * n_; k++) {
    if (k != p && rows_[k].xs.get(q)) {
      rowsum(k, p);
    }
  }
  bool bit = forced ? *forced : static_cast<bool>(rng() & 1);
  rows_[p - n_] = rows_[p];
  rows_[p] = PauliString(n_);
  rows_[p].zs.set(q, true);
  rows_[p].phase = bit ? 2 : 0;
  return bit;
}

std::vector<PauliString> TableauSimulator::stabilizers() const {
  return std::vector<PauliString>(rows_.begin() + static_cast<long>(n_), rows_.end());
}

RunResult run(const CliffordCircuit &c, const RunOptions &options) {
  auto violations = validate_circuit(c);
  if (!violations.empty()) {
    throw ValidationError(std::string("invalid circuit: ") + violation_name(violations.front().kind) + ": " +
                          violations.front().message);
  }
  for (const auto &q : c.qubits) {
    if (q.open_input) {
      throw ValidationError("qubit " + std::to_string(q.id) + " is an open input; close the circuit first");
    }
  }
  size_t n = c.qubits.size();
  std::map<int, size_t> index;
  for (size_t k = 0; k < n; k++) {
    index[c.qubits[k].id] = k;
  }
  TableauSimulator sim(n);
  std::mt19937_64 rng(options.seed);
  RunResult res;
  std::vector<std::optional<Pauli>> measured(n);
  std::vector<size_t> t;

  auto check = [&]() {
    StabTableau all{{}, sim.stabilizers()};
    for (const auto &q : c.qubits) {
      all.qubits.push_back(q.id);
    }
    if (!all.check_invariants()) {
      throw std::logic_error("tableau invariants broken");
    }
  };

  for (const auto &slice : c.slices) {
    for (const Gate &g : slice) {
      t.clear();
      for (int q : g.qubits) {
        t.push_back(index.at(q));
      }
      if (g.kind == GateKind::PrepZ) {
        // Fresh qubits start in |0>.
      } else if (g.kind == GateKind::PrepX) {
        sim.h(t[0]);
      } else if (is_measurement(g.kind)) {
        bool x_basis = g.kind == GateKind::MeasX;
        if (x_basis) {
          sim.h(t[0]);
        }
        std::optional<bool> forced;
        if (auto it = options.forcing.find(g.outcome); it != options.forcing.end()) {
          forced = it->second;
        }
        bool deterministic = false;
        bool bit = sim.measure_z(t[0], forced, rng, deterministic);
        if (deterministic && forced && *forced != bit && options.policy == ForcingPolicy::Strict) {
          throw ForcedContradiction("outcome " + g.outcome + " is deterministically " + std::to_string(bit) +
                                    " but was forced to " + std::to_string(*forced));
        }
        if (x_basis) {
          sim.h(t[0]);
        }
        res.outcomes.entries.push_back({g.outcome, bit, deterministic});
        measured[t[0]] = gate_basis(g.kind);
      } else {
        sim.apply(g.kind, t);
      }
      if (options.check_invariants) {
        check();
      }
    }
  }

  // Retire measured qubits: each is in a product eigenstate, so one generator
  // per measured qubit carries its column and the rest can be cleared of it.
  std::vector<PauliString> rows = sim.stabilizers();
  std::vector<bool> used(rows.size(), false);
  for (size_t q = 0; q < n; q++) {
    if (!measured[q]) {
      continue;
    }
    size_t pivot = rows.size();
    for (size_t r = 0; r < rows.size(); r++) {
      if (!used[r] && rows[r].get(q) != Pauli::I) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) {
      throw std::logic_error("measured qubit has no stabilizer");
    }
    used[pivot] = true;
    for (size_t r = 0; r < rows.size(); r++) {
      if (r != pivot && !used[r] && rows[r].get(q) != Pauli::I) {
        rows[r] *= rows[pivot];
      }
    }
  }
  for (size_t k = 0; k < n; k++) {
    if (!measured[k]) {
      res.final.qubits.push_back(c.qubits[k].id);
    }
  }
  for (size_t r = 0; r < rows.size(); r++) {
    if (used[r]) {
      continue;
    }
    PauliString g(res.final.qubits.size());
    g.phase = rows[r].phase;
    size_t col = 0;
    for (size_t k = 0; k < n; k++) {
      if (measured[k]) {
        if (rows[r].get(k) != Pauli::I) {
          throw std::logic_error("retired qubit still entangled");
        }
        continue;
      }
      g.set(col++, rows[r].get(k));
    }
    res.final.generators.push_back(std::move(g));
  }
  return res;
}

std::vector<PauliString> conjugation_images(const CliffordCircuit &c) {
  size_t n = c.qubits.size();
  std::map<int, size_t> index;
  for (size_t k = 0; k < n; k++) {
    index[c.qubits[k].id] = k;
  }
  TableauSimulator sim(n);
  std::vector<size_t> t;
  for (const auto &slice : c.slices) {
    for (const Gate &g : slice) {
      if (is_measurement(g.kind)) {
        throw ValidationError("conjugation_images needs a measurement-free circuit");
      }
      if (is_prep(g.kind)) {
        continue;
      }
      t.clear();
      for (int q : g.qubits) {
        t.push_back(index.at(q));
      }
      sim.apply(g.kind, t);
    }
  }
  std::vector<PauliString> out;
  for (size_t k = 0; k < n; k++) {
    out.push_back(sim.destabilizer(k));
    out.push_back(sim.stabilizer(k));
  }
  return out;
}

}  // namespace foldweb
