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

#include <nlohmann/json.hpp>
#include <string>

#include "foldweb/circuit.hpp"
#include "foldweb/pauliweb.hpp"
#include "foldweb/zx.hpp"

namespace foldweb {

/// {diagram_hash, nodes: [...], edges: [...]} in id order.
nlohmann::ordered_json diagram_to_json(const ZxDiagram &zx);

nlohmann::ordered_json signature_to_json(const BoundarySignature &sig);

/// {diagram_hash, labels: {"<edge id>": "X"|"Y"|"Z"}, signature}. I labels are
/// omitted; the signature is null when the web is not valid on the diagram.
nlohmann::ordered_json web_to_json(const ZxDiagram &zx, const LegMap &legs, const PauliWeb &web);

struct WebFile {
  std::string diagram_hash;
  PauliWeb web;
};

/// Reads a web JSON document for a diagram with `num_edges` edges. Throws
/// SchemaError for malformed content or labels on unknown edges.
WebFile web_from_json(const nlohmann::json &doc, size_t num_edges);

}  // namespace foldweb
