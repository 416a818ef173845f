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

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "foldweb/circuit.hpp"
#include "foldweb/pauli.hpp"

namespace foldweb {

/// Stabilizer generators of a state, over the columns `qubits` (circuit
/// qubit ids).
struct StabTableau {
  std::vector<int> qubits;
  std::vector<PauliString> generators;

  size_t num_qubits() const { return qubits.size(); }
  /// Generators pairwise commute, are Hermitian and are independent.
  bool check_invariants() const;
};

enum class Membership { InGroup, AntiCommutes, IndependentCommuting };

struct ContainsResult {
  Membership status = Membership::IndependentCommuting;
  /// For InGroup: the state's eigenvalue of p (+1 or -1).
  int sign = 0;
};

/// Decides whether +p or -p lies in the stabilizer group. Throws ShapeError
/// when p's length differs from the tableau's.
ContainsResult contains_pauli(const StabTableau &t, const PauliString &p);

struct OutcomeEntry {
  std::string id;
  bool bit = false;
  bool deterministic = false;
};

struct OutcomeRecord {
  /// In measurement order.
  std::vector<OutcomeEntry> entries;

  std::optional<bool> bit(const std::string &id) const;
  std::map<std::string, bool> bits() const;
};

/// What to do when a forced bit disagrees with a deterministic outcome.
enum class ForcingPolicy { Strict, IgnoreDeterministic };

struct RunOptions {
  std::map<std::string, bool> forcing;
  ForcingPolicy policy = ForcingPolicy::Strict;
  uint64_t seed = 0;
  /// Re-checks generator commutation and independence after every gate.
  bool check_invariants = false;
};

struct RunResult {
  /// Over the unmeasured qubits; measured qubits are retired.
  StabTableau final;
  OutcomeRecord outcomes;
};

/// Gottesman-Knill simulation of a closed circuit (no open inputs). Random
/// outcomes come from the seeded generator unless forced. Throws
/// ValidationError for invalid or open-input circuits and ForcedContradiction
/// under the Strict policy.
RunResult run(const CliffordCircuit &c, const RunOptions &options = {});

/// Aaronson-Gottesman tableau with destabilizers, starting in |0...0>. Gate
/// updates use bitwise rules that are tested against conjugation_rule().
class TableauSimulator {
 public:
  explicit TableauSimulator(size_t num_qubits);

  size_t num_qubits() const { return n_; }
  void h(size_t q);
  void s(size_t q);
  void sdg(size_t q);
  void cnot(size_t control, size_t target);
  void cz(size_t a, size_t b);
  void apply(GateKind kind, std::span<const size_t> targets);

  bool is_deterministic_z(size_t q) const;
  /// Measures Z on q. A forced bit is used when the outcome is random;
  /// `deterministic` reports which case occurred.
  bool measure_z(size_t q, std::optional<bool> forced, std::mt19937_64 &rng, bool &deterministic);

  /// Row k of the destabilizers / stabilizers. Starting from the identity
  /// tableau and applying only unitaries, these are U X_k U^dag and
  /// U Z_k U^dag.
  const PauliString &destabilizer(size_t k) const { return rows_[k]; }
  const PauliString &stabilizer(size_t k) const { return rows_[n_ + k]; }
  std::vector<PauliString> stabilizers() const;

 private:
  void rowsum(size_t target, size_t source);

  size_t n_;
  std::vector<PauliString> rows_;
};

/// Images U X_k U^dag and U Z_k U^dag (interleaved: X_0, Z_0, X_1, ...) of
/// the circuit's unitary part, computed with the tableau update rules.
/// Preparations are skipped; measurements raise ValidationError.
std::vector<PauliString> conjugation_images(const CliffordCircuit &c);

}  // namespace foldweb
