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

#include "foldweb/verify.hpp"

#include <chrono>
#include <random>
#include <utility>

#include "foldweb/circuit_json.hpp"
#include "foldweb/errors.hpp"
#include "foldweb/lattice.hpp"
#include "foldweb/render.hpp"

namespace foldweb {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<int> data_ids(const Lattice &lat) {
  std::vector<int> out;
  for (Coord c : lat.data()) {
    out.push_back(lat.data_id(c));
  }
  return out;
}

const char *membership_name(Membership m) {
  switch (m) {
    case Membership::InGroup:
      return "in group";
    case Membership::AntiCommutes:
      return "anticommutes with the final state";
    case Membership::IndependentCommuting:
      return "commutes but is not in the group";
  }
  return "?";
}

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

// Pins, solves, checks and (with an oracle) sign-checks one web.
struct PinnedWeb {
  bool found = false;
  bool signature_ok = false;
  std::optional<SignCheck> oracle;
  NamedWeb named;
};

PinnedWeb solve_pinned(const std::string &name, const Lowered &low, const Gf2System &sys,
                       const std::vector<int> &qubits, const PauliString *in, const PauliString &out,
                       const SignOracle *oracle) {
  PinnedWeb res;
  res.named.name = name;
  WebPins pins;
  pin_legs(pins, low.legs.output_leg, qubits, out);
  if (!low.legs.input_leg.empty()) {
    pin_legs(pins, low.legs.input_leg, qubits, in ? *in : PauliString(qubits.size()));
  }
  auto web = solve(low.diagram, sys, pins);
  if (!web || !check_web(low.diagram, *web).empty()) {
    return res;
  }
  res.found = true;
  BoundarySignature sig = boundary_signature(low.diagram, low.legs, *web);
  PauliString want_in = in ? *in : PauliString(qubits.size());
  res.signature_ok = signature_pauli(sig.outputs, qubits) == out &&
                     (low.legs.input_leg.empty() || signature_pauli(sig.inputs, qubits) == want_in);
  res.named.web = web_to_json(low.diagram, low.legs, *web);
  res.named.outcome_support = sig.measurement_support;
  if (oracle) {
    res.oracle = oracle->check(sig);
    res.named.oracle = res.oracle;
  }
  return res;
}

void stamp(VerificationReport &rep, const CliffordCircuit &c, const ZxDiagram &zx, size_t trials, uint64_t seed) {
  rep.circuit_hash = circuit_hash(c);
  rep.diagram_hash = diagram_hash(zx);
  rep.trials_requested = trials;
  rep.seed = seed;
  rep.oracle_skipped = trials == 0;
}

void stamp_oracle(VerificationReport &rep, const SignOracle &oracle) {
  rep.trial_runs = oracle.runs();
  rep.exhaustive = oracle.exhaustive();
}

}  // namespace

std::vector<std::map<std::string, bool>> forcing_assignments(const std::vector<std::string> &outcomes, size_t trials,
                                                             uint64_t seed) {
  std::vector<std::map<std::string, bool>> out;
  if (trials == 0) {
    return out;
  }
  size_t m = outcomes.size();
  if (m <= kExhaustiveOutcomeLimit) {
    for (size_t k = 0; k < (size_t{1} << m); k++) {
      std::map<std::string, bool> f;
      for (size_t j = 0; j < m; j++) {
        f[outcomes[j]] = (k >> j) & 1;
      }
      out.push_back(std::move(f));
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  for (size_t t = 0; t < trials; t++) {
    std::map<std::string, bool> f;
    for (const auto &id : outcomes) {
      f[id] = rng() & 1;
    }
    out.push_back(std::move(f));
  }
  return out;
}

SignOracle::SignOracle(const CliffordCircuit &c, size_t trials, uint64_t seed) : closed_(close_open_inputs(c)) {
  auto outcomes = closed_.circuit.outcome_ids();
  exhaustive_ = outcomes.size() <= kExhaustiveOutcomeLimit;
  size_t k = 0;
  for (auto &forcing : forcing_assignments(outcomes, trials, seed)) {
    RunOptions opts;
    opts.forcing = std::move(forcing);
    opts.policy = ForcingPolicy::IgnoreDeterministic;
    opts.seed = seed + k++;
    runs_.push_back(run(closed_.circuit, opts));
  }
}

SignCheck SignOracle::check(const PauliString &p, const std::vector<std::string> &support) const {
  SignCheck res;
  for (size_t r = 0; r < runs_.size(); r++) {
    const RunResult &run = runs_[r];
    ContainsResult cr = contains_pauli(run.final, p);
    if (cr.status != Membership::InGroup) {
      res.detail = "run " + std::to_string(r) + ": " + p.str() + " " + membership_name(cr.status);
      return res;
    }
    int s = cr.sign;
    for (const auto &m : support) {
      auto bit = run.outcomes.bit(m);
      if (!bit) {
        res.detail = "outcome " + m + " not measured";
        return res;
      }
      if (*bit) {
        s = -s;
      }
    }
    if (r == 0) {
      res.s0 = s;
    } else if (s != res.s0) {
      res.detail = "run " + std::to_string(r) + ": sign " + sign_str(s) + " differs from s0 = " + sign_str(res.s0);
      res.s0 = 0;
      return res;
    }
  }
  res.holds = true;
  res.detail = "s0 = " + sign_str(res.s0) + " over " + std::to_string(runs_.size()) + " runs";
  return res;
}

PauliString SignOracle::signature_operator(const BoundarySignature &sig) const {
  std::vector<int> finals = output_qubits(closed_.circuit);
  std::map<int, size_t> col;
  for (size_t k = 0; k < finals.size(); k++) {
    col[finals[k]] = k;
  }
  PauliString p(finals.size());
  auto place = [&](int q, Pauli l) {
    auto it = col.find(q);
    if (it == col.end()) {
      throw ValidationError("signature names qubit " + std::to_string(q) + " which does not survive");
    }
    p.set(it->second, p.get(it->second) ^ l);
  };
  for (const auto &[q, l] : sig.outputs) {
    place(q, l);
  }
  for (const auto &[q, l] : sig.inputs) {
    place(closed_.reference_of.at(q), l);
  }
  return p;
}

SignCheck SignOracle::check(const BoundarySignature &sig) const {
  return check(signature_operator(sig), sig.measurement_support);
}

bool VerificationReport::pass() const {
  if (checks.empty()) {
    return false;
  }
  for (const auto &c : checks) {
    if (!c.pass) {
      return false;
    }
  }
  return true;
}

void VerificationReport::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

nlohmann::ordered_json report_to_json(const VerificationReport &r) {
  using J = nlohmann::ordered_json;
  J doc;
  doc["scheme"] = r.scheme;
  doc["d"] = r.d ? J(*r.d) : J(nullptr);
  doc["verdict"] = r.pass() ? "PASS" : "FAIL";
  doc["circuit_hash"] = r.circuit_hash;
  doc["diagram_hash"] = r.diagram_hash;
  J checks = J::array();
  for (const auto &c : r.checks) {
    checks.push_back({{"name", c.name}, {"verdict", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
  }
  doc["checks"] = std::move(checks);
  J webs = J::array();
  for (const auto &w : r.webs) {
    J entry;
    entry["name"] = w.name;
    entry["outcome_support"] = w.outcome_support;
    if (w.oracle) {
      entry["oracle"] = {{"holds", w.oracle->holds}, {"s0", w.oracle->s0}, {"detail", w.oracle->detail}};
    } else {
      entry["oracle"] = nullptr;
    }
    entry["web"] = w.web;
    webs.push_back(std::move(entry));
  }
  doc["webs"] = std::move(webs);
  doc["trials"] = {{"requested", r.trials_requested},
                   {"runs", r.trial_runs},
                   {"mode", r.exhaustive ? "exhaustive" : "sampled"},
                   {"seed", r.seed}};
  doc["oracle_skipped"] = r.oracle_skipped;
  doc["timings"] = {{"total_ms", r.elapsed_ms}};
  return doc;
}

const std::vector<std::string> &scheme_ids() {
  static const std::vector<std::string> ids = {"cclp-y", "encoder", "init0", "init+"};
  return ids;
}

CliffordCircuit make_scheme_circuit(const std::string &scheme, int d) {
  if (scheme == "cclp-y") {
    return cclp_y_init_circuit(d);
  }
  if (scheme == "encoder") {
    return encoder_circuit(d, 1);
  }
  if (scheme == "init0") {
    return transversal_init_circuit(d, Pauli::Z);
  }
  if (scheme == "init+") {
    return transversal_init_circuit(d, Pauli::X);
  }
  throw ValidationError("unknown scheme '" + scheme + "' (expected cclp-y, encoder, init0 or init+)");
}

VerificationReport verify_y(int d, size_t trials, uint64_t seed) {
  auto start = Clock::now();
  Lattice lat = build_lattice(d);
  CliffordCircuit c = cclp_y_init_circuit(d);
  Lowered low = lower_to_zx(c);
  Gf2System sys = build_system(low.diagram);
  VerificationReport rep;
  rep.scheme = "cclp-y";
  rep.d = d;
  stamp(rep, c, low.diagram, trials, seed);

  std::optional<SignOracle> oracle;
  if (trials > 0) {
    oracle.emplace(c, trials, seed);
    stamp_oracle(rep, *oracle);
  }
  std::vector<int> data = data_ids(lat);
  PauliString y = logical_rep(lat, Pauli::Y);

  PinnedWeb w = solve_pinned("logical_Y", low, sys, data, nullptr, y, oracle ? &*oracle : nullptr);
  rep.add("y_web_exists", w.found, w.found ? "" : "no web carries logical Y to the outputs");
  if (w.found) {
    rep.add("y_signature", w.signature_ok, "outputs " + y.str());
    rep.add("y_support_weight", y.weight() == static_cast<size_t>(2 * d - 1),
            std::to_string(y.weight()) + " qubits");
    if (w.oracle) {
      rep.add("y_sign_relation", w.oracle->holds, w.oracle->detail);
    }
    rep.webs.push_back(std::move(w.named));
  }

  PauliString placement(c.qubits.size());
  PauliString x = logical_rep(lat, Pauli::X);
  for (size_t k = 0; k < data.size(); k++) {
    placement.set(c.index_of(data[k]), x.get(k));
  }
  PropagationResult prop = propagate_pauli(c, placement);
  bool shape = prop.output_qubits == data && prop.final.unsigned_part() == y;
  rep.add("x_to_y_propagation", shape, "X_L -> " + prop.final.str());
  if (oracle && shape) {
    SignCheck sc = oracle->check(y, prop.outcome_support);
    bool agree = sc.holds && sc.s0 == prop.sign();
    rep.add("propagation_sign", agree,
            sc.holds ? "propagated " + sign_str(prop.sign()) + ", tableau " + sc.detail : sc.detail);
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerificationReport verify_stabilizers(int d, const std::string &scheme, size_t trials, uint64_t seed) {
  auto start = Clock::now();
  Lattice lat = build_lattice(d);
  CliffordCircuit c = make_scheme_circuit(scheme, d);
  Lowered low = lower_to_zx(c);
  Gf2System sys = build_system(low.diagram);
  VerificationReport rep;
  rep.scheme = scheme;
  rep.d = d;
  stamp(rep, c, low.diagram, trials, seed);

  std::optional<SignOracle> oracle;
  if (trials > 0) {
    oracle.emplace(c, trials, seed);
    stamp_oracle(rep, *oracle);
  }
  const SignOracle *orc = oracle ? &*oracle : nullptr;
  std::vector<int> data = data_ids(lat);

  size_t total = lat.plaquettes().size();
  size_t found = 0;
  size_t confirmed = 0;
  std::string missing;
  for (size_t k = 0; k < total; k++) {
    const Plaquette &pl = lat.plaquettes()[k];
    std::string name = std::string("plaquette_") + std::to_string(k) + "_" + pauli_char(pl.type);
    PinnedWeb w = solve_pinned(name, low, sys, data, nullptr, plaquette_operator(lat, k), orc);
    if (w.found && w.signature_ok) {
      found++;
      confirmed += w.oracle && w.oracle->holds;
      rep.webs.push_back(std::move(w.named));
    } else {
      missing += (missing.empty() ? "" : " ") + name;
    }
  }
  rep.add("plaquette_webs", found == total,
          std::to_string(found) + "/" + std::to_string(total) + (missing.empty() ? "" : "; missing " + missing));
  if (orc) {
    rep.add("plaquette_oracle", confirmed == total, std::to_string(confirmed) + "/" + std::to_string(total));
  }

  auto logical = [&](Pauli which, bool correlator) {
    PauliString op = logical_rep(lat, which);
    std::string name = std::string("logical_") + pauli_char(which);
    PinnedWeb w = solve_pinned(name, low, sys, data, correlator ? &op : nullptr, op, orc);
    rep.add(name + "_web", w.found && w.signature_ok, w.found ? "" : "no web found");
    if (w.oracle) {
      rep.add(name + "_oracle", w.oracle->holds, w.oracle->detail);
    }
    if (w.found) {
      rep.webs.push_back(std::move(w.named));
    }
  };
  if (scheme == "encoder") {
    logical(Pauli::X, true);
    logical(Pauli::Z, true);
  } else if (scheme == "init0") {
    logical(Pauli::Z, false);
  } else if (scheme == "init+") {
    logical(Pauli::X, false);
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerificationReport crosscheck(const CliffordCircuit &c, size_t trials, uint64_t seed,
                              const std::optional<WebFile> &web, const std::string &source) {
  auto start = Clock::now();
  Lowered low = lower_to_zx(c);
  VerificationReport rep;
  rep.scheme = source;
  if (c.distance) {
    rep.d = *c.distance;
  }
  stamp(rep, c, low.diagram, trials, seed);
  if (web && web->diagram_hash != rep.diagram_hash) {
    throw OverlayMismatch("web was computed for diagram " + web->diagram_hash + ", circuit lowers to " +
                          rep.diagram_hash);
  }
  std::optional<SignOracle> oracle;
  if (trials > 0) {
    oracle.emplace(c, trials, seed);
    stamp_oracle(rep, *oracle);
  }

  std::vector<std::pair<std::string, PauliWeb>> webs;
  if (web) {
    webs.emplace_back("web_file", web->web);
  } else {
    auto basis = web_basis(low.diagram);
    for (size_t k = 0; k < basis.size(); k++) {
      webs.emplace_back("basis_" + std::to_string(k), std::move(basis[k]));
    }
  }

  size_t sound = 0;
  std::string failures;
  for (auto &[name, w] : webs) {
    auto violations = check_web(low.diagram, w);
    if (!violations.empty()) {
      std::string edges;
      for (EdgeId e : suspect_edges(low.diagram, violations)) {
        edges += (edges.empty() ? "e" : " e") + std::to_string(e.value);
      }
      rep.add(name + "_valid", false,
              std::to_string(violations.size()) + " spider rule(s) broken; suspect edges: " + edges);
      continue;
    }
    BoundarySignature sig = boundary_signature(low.diagram, low.legs, w);
    NamedWeb named{name, web_to_json(low.diagram, low.legs, w), sig.measurement_support, std::nullopt};
    if (oracle) {
      SignCheck sc = oracle->check(sig);
      named.oracle = sc;
      if (sc.holds) {
        sound++;
      } else {
        failures += (failures.empty() ? "" : "; ") + name + ": " + sc.detail;
      }
    }
    rep.webs.push_back(std::move(named));
  }
  if (web) {
    if (rep.checks.empty()) {
      rep.add("web_file_valid", true);
    }
  } else {
    rep.add("basis", true, std::to_string(webs.size()) + " webs");
  }
  if (oracle) {
    rep.add("sign_relation", failures.empty() && sound == rep.webs.size(),
            std::to_string(sound) + "/" + std::to_string(rep.webs.size()) +
                (failures.empty() ? "" : "; " + failures));
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace foldweb
