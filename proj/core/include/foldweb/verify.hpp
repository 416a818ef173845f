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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "foldweb/circuit.hpp"
#include "foldweb/pauliweb.hpp"
#include "foldweb/tableau.hpp"
#include "foldweb/web_json.hpp"

namespace foldweb {

/// Exhaustive enumeration up to this many outcomes, seeded sampling beyond.
inline constexpr size_t kExhaustiveOutcomeLimit = 10;

/// Outcome forcings for the sign-relation trials: all 2^m assignments when
/// m <= kExhaustiveOutcomeLimit, else `trials` uniform samples from `seed`.
/// trials == 0 yields none.
std::vector<std::map<std::string, bool>> forcing_assignments(const std::vector<std::string> &outcomes, size_t trials,
                                                             uint64_t seed);

struct SignCheck {
  bool holds = false;
  /// The constant s0 when the relation holds.
  int s0 = 0;
  std::string detail;
};

/// Tableau runs of a circuit (closed internally when it has open inputs),
/// against which web signatures are checked.
class SignOracle {
 public:
  SignOracle(const CliffordCircuit &c, size_t trials, uint64_t seed);

  size_t runs() const { return runs_.size(); }
  bool exhaustive() const { return exhaustive_; }
  const ClosedCircuit &closed() const { return closed_; }

  /// sign(p) * prod_{m in support} (-1)^m is the same in every run, with p
  /// over the final qubits. Fails when p is not in some run's group.
  SignCheck check(const PauliString &p, const std::vector<std::string> &support) const;

  /// The signature as a Pauli over the final qubits: outputs on themselves,
  /// inputs on their Bell-pair references.
  PauliString signature_operator(const BoundarySignature &sig) const;
  SignCheck check(const BoundarySignature &sig) const;

 private:
  ClosedCircuit closed_;
  bool exhaustive_ = false;
  std::vector<RunResult> runs_;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct NamedWeb {
  std::string name;
  nlohmann::ordered_json web;
  std::vector<std::string> outcome_support;
  std::optional<SignCheck> oracle;
};

struct VerificationReport {
  std::string scheme;
  std::optional<int> d;
  std::vector<Check> checks;
  std::vector<NamedWeb> webs;
  size_t trials_requested = 0;
  size_t trial_runs = 0;
  bool exhaustive = false;
  uint64_t seed = 0;
  bool oracle_skipped = false;
  std::string circuit_hash;
  std::string diagram_hash;
  double elapsed_ms = 0.0;

  bool pass() const;
  void add(std::string name, bool pass, std::string detail = {});
};

/// Everything but the timings block is a function of the inputs.
nlohmann::ordered_json report_to_json(const VerificationReport &r);

/// Logical Y web on the fold-transversal |Y> initialization, its sign
/// relation over forced-outcome tableau runs, and the X -> Y propagation.
VerificationReport verify_y(int d, size_t trials, uint64_t seed);

/// Plaquette webs for scheme cclp-y, encoder, init0 or init+, plus logical
/// correlator webs for encoder (X and Z) and the init schemes.
VerificationReport verify_stabilizers(int d, const std::string &scheme, size_t trials, uint64_t seed);

/// Signature soundness of every web-basis element, or of `web` alone when
/// given (checked for validity first). `source` labels the report.
VerificationReport crosscheck(const CliffordCircuit &c, size_t trials, uint64_t seed,
                              const std::optional<WebFile> &web = std::nullopt, const std::string &source = "circuit");

/// Known scheme ids, in CLI order.
const std::vector<std::string> &scheme_ids();
/// Throws ValidationError for an unknown scheme, OddDistanceRequired for bad d.
CliffordCircuit make_scheme_circuit(const std::string &scheme, int d);

}  // namespace foldweb
