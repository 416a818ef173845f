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

#include "foldweb/web_json.hpp"

#include <string>

#include "foldweb/errors.hpp"
#include "foldweb/render.hpp"

namespace foldweb {

namespace {

std::string letter(Pauli p) { return std::string(1, p == Pauli::I ? 'I' : pauli_char(p)); }

nlohmann::ordered_json side_json(const std::map<int, Pauli> &side) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto &[q, p] : side) {
    j[std::to_string(q)] = letter(p);
  }
  return j;
}

}  // namespace

nlohmann::ordered_json diagram_to_json(const ZxDiagram &zx) {
  using J = nlohmann::ordered_json;
  J nodes = J::array();
  for (const Node &n : zx.nodes()) {
    J node;
    node["id"] = n.id.value;
    if (n.is_spider()) {
      node["kind"] = n.spider().color == SpiderColor::Z ? "Z" : "X";
      node["phase"] = n.spider().phase;
    } else {
      node["kind"] = std::get<Boundary>(n.kind).direction == BoundaryDirection::In ? "in" : "out";
    }
    node["role"] = role_name(n.role);
    if (n.tag) {
      node["qubit"] = n.tag->qubit;
      node["slice"] = n.tag->slice;
    }
    if (n.role == NodeRole::Measure) {
      node["outcome"] = zx.outcome(n.id);
    }
    nodes.push_back(std::move(node));
  }
  J edges = J::array();
  for (const Edge &e : zx.edges()) {
    edges.push_back({{"id", e.id.value}, {"u", e.u.value}, {"v", e.v.value}, {"hadamard", e.hadamard}});
  }
  J doc;
  doc["diagram_hash"] = diagram_hash(zx);
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc;
}

nlohmann::ordered_json signature_to_json(const BoundarySignature &sig) {
  nlohmann::ordered_json j;
  j["inputs"] = side_json(sig.inputs);
  j["outputs"] = side_json(sig.outputs);
  j["measurement_support"] = sig.measurement_support;
  std::vector<uint32_t> anchors;
  for (NodeId n : sig.prep_anchors) {
    anchors.push_back(n.value);
  }
  j["prep_anchors"] = anchors;
  return j;
}

nlohmann::ordered_json web_to_json(const ZxDiagram &zx, const LegMap &legs, const PauliWeb &web) {
  nlohmann::ordered_json j;
  j["diagram_hash"] = diagram_hash(zx);
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (size_t e = 0; e < web.size(); e++) {
    Pauli p = web.label(EdgeId{static_cast<uint32_t>(e)});
    if (p != Pauli::I) {
      labels[std::to_string(e)] = letter(p);
    }
  }
  j["labels"] = std::move(labels);
  if (check_web(zx, web).empty()) {
    j["signature"] = signature_to_json(boundary_signature(zx, legs, web));
  } else {
    j["signature"] = nullptr;
  }
  return j;
}

WebFile web_from_json(const nlohmann::json &doc, size_t num_edges) {
  if (!doc.is_object()) {
    throw SchemaError("web: expected object");
  }
  auto hash = doc.find("diagram_hash");
  if (hash == doc.end() || !hash->is_string()) {
    throw SchemaError("web.diagram_hash: expected string");
  }
  auto labels = doc.find("labels");
  if (labels == doc.end() || !labels->is_object()) {
    throw SchemaError("web.labels: expected object");
  }
  WebFile out{hash->get<std::string>(), PauliWeb(num_edges)};
  for (const auto &[key, value] : labels->items()) {
    size_t pos = 0;
    unsigned long e = 0;
    try {
      e = std::stoul(key, &pos);
    } catch (const std::exception &) {
      pos = 0;
    }
    if (pos != key.size() || key.empty()) {
      throw SchemaError("web.labels: edge id '" + key + "' is not a number");
    }
    if (e >= num_edges) {
      throw SchemaError("web.labels: edge " + key + " does not exist");
    }
    if (!value.is_string() || value.get<std::string>().size() != 1) {
      throw SchemaError("web.labels[" + key + "]: expected one of I, X, Y, Z");
    }
    try {
      out.web.set(EdgeId{static_cast<uint32_t>(e)}, pauli_from_char(value.get<std::string>()[0]));
    } catch (const std::invalid_argument &) {
      throw SchemaError("web.labels[" + key + "]: expected one of I, X, Y, Z");
    }
  }
  return out;
}

}  // namespace foldweb
