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

#include "foldweb/circuit_json.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "foldweb/errors.hpp"
#include "foldweb/render.hpp"

namespace foldweb {

using ojson = nlohmann::ordered_json;

namespace {

QubitRole role_from_name(const std::string &name, const std::string &where) {
  for (QubitRole r : {QubitRole::Data, QubitRole::AncillaX, QubitRole::AncillaZ}) {
    if (name == qubit_role_name(r)) {
      return r;
    }
  }
  throw SchemaError(where + ": unknown role '" + name + "'");
}

const ojson &field(const ojson &obj, const char *key, const std::string &where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(where + ": missing field '" + key + "'");
  }
  return *it;
}

int int_field(const ojson &obj, const char *key, const std::string &where) {
  const ojson &v = field(obj, key, where);
  if (!v.is_number_integer()) {
    throw SchemaError(where + "." + key + ": expected integer");
  }
  return v.get<int>();
}

bool bool_field(const ojson &obj, const char *key, const std::string &where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    return false;
  }
  if (!it->is_boolean()) {
    throw SchemaError(where + "." + key + ": expected boolean");
  }
  return it->get<bool>();
}

size_t line_of(std::string_view text, size_t byte) {
  size_t line = 1;
  for (size_t k = 0; k < byte && k < text.size(); k++) {
    if (text[k] == '\n') {
      line++;
    }
  }
  return line;
}

}  // namespace

std::string serialize_circuit(const CliffordCircuit &c) {
  std::ostringstream out;
  out << "{\n";
  if (c.distance) {
    out << "  \"distance\": " << *c.distance << ",\n";
  }
  out << "  \"qubits\": [";
  for (size_t k = 0; k < c.qubits.size(); k++) {
    const QubitDecl &q = c.qubits[k];
    ojson j;
    j["id"] = q.id;
    j["role"] = qubit_role_name(q.role);
    j["row"] = q.row;
    j["col"] = q.col;
    j["open_input"] = q.open_input;
    j["open_output"] = q.open_output;
    out << (k ? ",\n    " : "\n    ") << j.dump();
  }
  out << (c.qubits.empty() ? "],\n" : "\n  ],\n");
  out << "  \"slices\": [";
  for (size_t s = 0; s < c.slices.size(); s++) {
    ojson slice = ojson::array();
    for (const Gate &g : c.slices[s]) {
      ojson j;
      j["gate"] = std::string(gate_name(g.kind));
      j["args"] = g.qubits;
      if (is_measurement(g.kind)) {
        j["outcome"] = g.outcome;
      }
      slice.push_back(std::move(j));
    }
    out << (s ? ",\n    " : "\n    ") << slice.dump();
  }
  out << (c.slices.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

CliffordCircuit parse_circuit(std::string_view text) {
  ojson root;
  try {
    root = ojson::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    throw SchemaError("line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON: " + e.what());
  }
  if (!root.is_object()) {
    throw SchemaError("top level must be an object");
  }
  CliffordCircuit c;
  if (auto it = root.find("distance"); it != root.end() && !it->is_null()) {
    if (!it->is_number_integer()) {
      throw SchemaError("distance: expected integer");
    }
    c.distance = it->get<int>();
  }
  const ojson &qubits = field(root, "qubits", "circuit");
  if (!qubits.is_array()) {
    throw SchemaError("qubits: expected array");
  }
  for (size_t k = 0; k < qubits.size(); k++) {
    std::string where = "qubits[" + std::to_string(k) + "]";
    const ojson &q = qubits[k];
    if (!q.is_object()) {
      throw SchemaError(where + ": expected object");
    }
    const ojson &role = field(q, "role", where);
    if (!role.is_string()) {
      throw SchemaError(where + ".role: expected string");
    }
    c.qubits.push_back(QubitDecl{int_field(q, "id", where), role_from_name(role.get<std::string>(), where + ".role"),
                                 int_field(q, "row", where), int_field(q, "col", where),
                                 bool_field(q, "open_input", where), bool_field(q, "open_output", where)});
  }
  const ojson &slices = field(root, "slices", "circuit");
  if (!slices.is_array()) {
    throw SchemaError("slices: expected array");
  }
  for (size_t s = 0; s < slices.size(); s++) {
    std::string swhere = "slices[" + std::to_string(s) + "]";
    if (!slices[s].is_array()) {
      throw SchemaError(swhere + ": expected array of gates");
    }
    TimeSlice slice;
    for (size_t k = 0; k < slices[s].size(); k++) {
      std::string where = swhere + "[" + std::to_string(k) + "]";
      const ojson &g = slices[s][k];
      if (!g.is_object()) {
        throw SchemaError(where + ": expected object");
      }
      const ojson &name = field(g, "gate", where);
      if (!name.is_string()) {
        throw SchemaError(where + ".gate: expected string");
      }
      Gate gate;
      try {
        gate.kind = gate_from_name(name.get<std::string>());
      } catch (const SchemaError &e) {
        throw SchemaError(where + ".gate: " + e.what());
      }
      const ojson &args = field(g, "args", where);
      if (!args.is_array()) {
        throw SchemaError(where + ".args: expected array");
      }
      for (const auto &a : args) {
        if (!a.is_number_integer()) {
          throw SchemaError(where + ".args: qubit ids must be integers");
        }
        gate.qubits.push_back(a.get<int>());
      }
      if (gate.qubits.size() != gate_arity(gate.kind)) {
        throw SchemaError(where + ".args: " + name.get<std::string>() + " takes " +
                          std::to_string(gate_arity(gate.kind)) + " qubit(s)");
      }
      if (gate.kind == GateKind::CZ && gate.qubits[0] > gate.qubits[1]) {
        std::swap(gate.qubits[0], gate.qubits[1]);
      }
      if (auto it = g.find("outcome"); it != g.end()) {
        if (!is_measurement(gate.kind)) {
          throw SchemaError(where + ".outcome: only measurements carry outcomes");
        }
        if (!it->is_string()) {
          throw SchemaError(where + ".outcome: expected string");
        }
        gate.outcome = it->get<std::string>();
        if (outcome_number(gate.outcome) < 0) {
          throw SchemaError(where + ".outcome: outcome ids look like \"m<k>\", got '" + gate.outcome + "'");
        }
      } else if (is_measurement(gate.kind)) {
        throw SchemaError(where + ": measurement needs an outcome");
      }
      slice.push_back(std::move(gate));
    }
    c.slices.push_back(std::move(slice));
  }
  return c;
}

std::string circuit_hash(const CliffordCircuit &c) { return hex64(fnv1a64(serialize_circuit(c))); }

}  // namespace foldweb
