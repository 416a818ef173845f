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

#include <string>
#include <string_view>

#include "foldweb/circuit.hpp"

namespace foldweb {

/// Canonical text: fixed field order, one qubit per line, one slice per line.
std::string serialize_circuit(const CliffordCircuit &c);

/// Parses the circuit schema. Structural problems raise SchemaError naming the
/// offending field (and line for malformed JSON). Parsing does not validate:
/// a slice touching a qubit twice parses fine and is reported by
/// validate_circuit.
CliffordCircuit parse_circuit(std::string_view text);

/// Hash of the canonical serialization, 16 hex digits.
std::string circuit_hash(const CliffordCircuit &c);

}  // namespace foldweb
