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

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "foldweb/circuit.hpp"
#include "foldweb/pauli.hpp"

namespace foldweb {

/// Amplitudes indexed by basis state; qubit k of the circuit (declaration
/// order) is bit k of the index.
using StateVector = std::vector<std::complex<double>>;

inline constexpr size_t kMaxStatevectorQubits = 8;
inline constexpr double kStatevectorTolerance = 1e-9;

/// Dense simulation with every measurement projected onto the given outcome.
/// Throws TooLarge above kMaxStatevectorQubits, ValidationError for invalid
/// or open-input circuits or a missing outcome, and ForcedContradiction when
/// an outcome has zero probability.
StateVector simulate_statevector(const CliffordCircuit &c, const std::map<std::string, bool> &outcomes);

/// || p|psi> - |psi> ||, with p over all of the vector's qubits.
double stabilizer_residual(const StateVector &psi, const PauliString &p);

struct StatevectorReport {
  bool agree = false;
  double max_residual = 0.0;
  size_t generators_checked = 0;
  std::map<std::string, bool> outcomes;
};

/// Runs the tableau with `forcing` (deterministic outcomes keep their computed
/// bit), replays the resulting outcomes on the state vector, and checks that
/// every final generator and every measured qubit's post-measurement
/// eigen-operator stabilizes it.
StatevectorReport statevector_check(const CliffordCircuit &c, const std::map<std::string, bool> &forcing,
                                    uint64_t seed = 0);

}  // namespace foldweb
