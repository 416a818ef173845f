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

#include "foldweb/statevector.hpp"

#include <bit>
#include <cmath>

#include "foldweb/errors.hpp"
#include "foldweb/tableau.hpp"

namespace foldweb {

namespace {

using cd = std::complex<double>;

const double kRootHalf = std::sqrt(0.5);

void apply_h(StateVector &psi, size_t q) {
  size_t bit = size_t{1} << q;
  for (size_t i = 0; i < psi.size(); i++) {
    if (i & bit) {
      continue;
    }
    cd a = psi[i];
    cd b = psi[i | bit];
    psi[i] = kRootHalf * (a + b);
    psi[i | bit] = kRootHalf * (a - b);
  }
}

void apply_phase(StateVector &psi, size_t q, cd factor) {
  size_t bit = size_t{1} << q;
  for (size_t i = 0; i < psi.size(); i++) {
    if (i & bit) {
      psi[i] *= factor;
    }
  }
}

void apply_cnot(StateVector &psi, size_t c, size_t t) {
  size_t cb = size_t{1} << c;
  size_t tb = size_t{1} << t;
  for (size_t i = 0; i < psi.size(); i++) {
    if ((i & cb) && !(i & tb)) {
      std::swap(psi[i], psi[i | tb]);
    }
  }
}

void apply_cz(StateVector &psi, size_t a, size_t b) {
  size_t mask = (size_t{1} << a) | (size_t{1} << b);
  for (size_t i = 0; i < psi.size(); i++) {
    if ((i & mask) == mask) {
      psi[i] = -psi[i];
    }
  }
}

void project_z(StateVector &psi, size_t q, bool outcome, const std::string &id) {
  size_t bit = size_t{1} << q;
  double norm = 0.0;
  for (size_t i = 0; i < psi.size(); i++) {
    if (static_cast<bool>(i & bit) != outcome) {
      psi[i] = 0.0;
    } else {
      norm += std::norm(psi[i]);
    }
  }
  if (norm < kStatevectorTolerance) {
    throw ForcedContradiction("outcome " + id + " = " + std::to_string(outcome) + " has zero probability");
  }
  double scale = 1.0 / std::sqrt(norm);
  for (auto &a : psi) {
    a *= scale;
  }
}

}  // namespace

StateVector simulate_statevector(const CliffordCircuit &c, const std::map<std::string, bool> &outcomes) {
  size_t n = c.qubits.size();
  if (n > kMaxStatevectorQubits) {
    throw TooLarge(std::to_string(n) + " qubits exceeds the state-vector cap of " +
                   std::to_string(kMaxStatevectorQubits));
  }
  auto violations = validate_circuit(c);
  if (!violations.empty()) {
    throw ValidationError(std::string("invalid circuit: ") + violation_name(violations.front().kind));
  }
  for (const auto &q : c.qubits) {
    if (q.open_input) {
      throw ValidationError("qubit " + std::to_string(q.id) + " is an open input");
    }
  }
  StateVector psi(size_t{1} << n, 0.0);
  psi[0] = 1.0;
  for (const auto &slice : c.slices) {
    for (const Gate &g : slice) {
      size_t a = c.index_of(g.qubits[0]);
      size_t b = g.qubits.size() > 1 ? c.index_of(g.qubits[1]) : 0;
      switch (g.kind) {
        case GateKind::PrepZ:
          break;
        case GateKind::PrepX:
        case GateKind::H:
          apply_h(psi, a);
          break;
        case GateKind::S:
          apply_phase(psi, a, cd(0.0, 1.0));
          break;
        case GateKind::Sdg:
          apply_phase(psi, a, cd(0.0, -1.0));
          break;
        case GateKind::CNOT:
          apply_cnot(psi, a, b);
          break;
        case GateKind::CZ:
          apply_cz(psi, a, b);
          break;
        case GateKind::MeasZ:
        case GateKind::MeasX: {
          auto it = outcomes.find(g.outcome);
          if (it == outcomes.end()) {
            throw ValidationError("no bit given for outcome " + g.outcome);
          }
          bool x_basis = g.kind == GateKind::MeasX;
          if (x_basis) {
            apply_h(psi, a);
          }
          project_z(psi, a, it->second, g.outcome);
          if (x_basis) {
            apply_h(psi, a);
          }
          break;
        }
      }
    }
  }
  return psi;
}

double stabilizer_residual(const StateVector &psi, const PauliString &p) {
  size_t xmask = 0;
  size_t zmask = 0;
  int ys = 0;
  for (size_t k = 0; k < p.size(); k++) {
    Pauli l = p.get(k);
    if (x_bit(l)) {
      xmask |= size_t{1} << k;
    }
    if (z_bit(l)) {
      zmask |= size_t{1} << k;
    }
    ys += l == Pauli::Y;
  }
  static const cd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cd base = kIPow[(p.phase + ys) & 3];
  double sq = 0.0;
  for (size_t i = 0; i < psi.size(); i++) {
    // p|i> lands on i ^ xmask; Z factors act before X.
    cd coeff = (std::popcount(i & zmask) & 1) ? -base : base;
    sq += std::norm(coeff * psi[i] - psi[i ^ xmask]);
  }
  return std::sqrt(sq);
}

StatevectorReport statevector_check(const CliffordCircuit &c, const std::map<std::string, bool> &forcing,
                                    uint64_t seed) {
  if (c.qubits.size() > kMaxStatevectorQubits) {
    throw TooLarge(std::to_string(c.qubits.size()) + " qubits exceeds the state-vector cap of " +
                   std::to_string(kMaxStatevectorQubits));
  }
  RunOptions opts;
  opts.forcing = forcing;
  opts.policy = ForcingPolicy::IgnoreDeterministic;
  opts.seed = seed;
  RunResult r = run(c, opts);
  StatevectorReport rep;
  rep.outcomes = r.outcomes.bits();
  StateVector psi = simulate_statevector(c, rep.outcomes);

  size_t n = c.qubits.size();
  auto consider = [&](const PauliString &p) {
    rep.max_residual = std::max(rep.max_residual, stabilizer_residual(psi, p));
    rep.generators_checked++;
  };
  for (const auto &g : r.final.generators) {
    PauliString full(n);
    full.phase = g.phase;
    for (size_t k = 0; k < g.size(); k++) {
      full.set(c.index_of(r.final.qubits[k]), g.get(k));
    }
    consider(full);
  }
  // Measured qubits end in the eigenstate their outcome names.
  for (const auto &slice : c.slices) {
    for (const Gate &g : slice) {
      if (!is_measurement(g.kind)) {
        continue;
      }
      PauliString p(n);
      p.set(c.index_of(g.qubits[0]), gate_basis(g.kind));
      p.phase = rep.outcomes.at(g.outcome) ? 2 : 0;
      consider(p);
    }
  }
  rep.agree = rep.max_residual <= kStatevectorTolerance;
  return rep;
}

}  // namespace foldweb
