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

#include "foldweb/zx.hpp"

#include "foldweb/errors.hpp"

namespace foldweb {

namespace {

int canonical_phase(int quarter_turns) { return ((quarter_turns % 4) + 4) % 4; }

bool is_degree_one_role(NodeRole role) { return role != NodeRole::Internal; }

}  // namespace

Spider Spider::z(int quarter_turns) { return Spider{SpiderColor::Z, canonical_phase(quarter_turns)}; }
Spider Spider::x(int quarter_turns) { return Spider{SpiderColor::X, canonical_phase(quarter_turns)}; }

const char *role_name(NodeRole role) {
  switch (role) {
    case NodeRole::Internal:
      return "internal";
    case NodeRole::Prep:
      return "prep";
    case NodeRole::Measure:
      return "measure";
    case NodeRole::BoundaryLeg:
      return "boundary";
  }
  return "?";
}

NodeId ZxDiagram::add_node(NodeKind kind, NodeRole role, std::optional<NodeTag> tag, std::optional<std::string> outcome) {
  bool boundary = std::holds_alternative<Boundary>(kind);
  if (boundary != (role == NodeRole::BoundaryLeg)) {
    throw ValidationError("boundary nodes must have the BoundaryLeg role and vice versa");
  }
  if (auto *s = std::get_if<Spider>(&kind)) {
    s->phase = canonical_phase(s->phase);
  }
  if (role == NodeRole::Measure) {
    if (!outcome || outcome->empty()) {
      throw RegistryError("measurement node needs an outcome id");
    }
    if (outcome_owner_.count(*outcome)) {
      throw RegistryError("duplicate outcome id '" + *outcome + "'");
    }
  } else if (outcome) {
    throw RegistryError("only measurement nodes carry outcome ids");
  }

  NodeId id{static_cast<uint32_t>(nodes_.size())};
  nodes_.push_back(Node{id, kind, role, tag});
  incidence_.emplace_back();
  if (role == NodeRole::Measure) {
    outcomes_[id] = *outcome;
    outcome_owner_[*outcome] = id;
  } else if (role == NodeRole::Prep) {
    preps_.push_back(id);
  }
  return id;
}

EdgeId ZxDiagram::add_edge(NodeId u, NodeId v, bool hadamard) {
  if (!contains(u) || !contains(v)) {
    throw NotFound("edge endpoint does not exist");
  }
  if (u == v) {
    throw ValidationError("self-loops are not allowed (node " + std::to_string(u.value) + ")");
  }
  for (NodeId n : {u, v}) {
    if (is_degree_one_role(nodes_[n.value].role) && !incidence_[n.value].empty()) {
      throw DegreeViolation(std::string(role_name(nodes_[n.value].role)) + " node " + std::to_string(n.value) +
                            " already has its single edge");
    }
  }
  EdgeId id{static_cast<uint32_t>(edges_.size())};
  edges_.push_back(Edge{id, u, v, hadamard});
  incidence_[u.value].push_back(id);
  incidence_[v.value].push_back(id);
  return id;
}

const Node &ZxDiagram::node(NodeId id) const {
  if (!contains(id)) {
    throw NotFound("no node " + std::to_string(id.value));
  }
  return nodes_[id.value];
}

const Edge &ZxDiagram::edge(EdgeId id) const {
  if (id.value >= edges_.size()) {
    throw NotFound("no edge " + std::to_string(id.value));
  }
  return edges_[id.value];
}

const std::vector<EdgeId> &ZxDiagram::incident(NodeId id) const {
  if (!contains(id)) {
    throw NotFound("no node " + std::to_string(id.value));
  }
  return incidence_[id.value];
}

const std::string &ZxDiagram::outcome(NodeId measure_node) const {
  auto it = outcomes_.find(measure_node);
  if (it == outcomes_.end()) {
    throw NotFound("node " + std::to_string(measure_node.value) + " is not a measurement");
  }
  return it->second;
}

std::vector<DiagramViolation> ZxDiagram::validate() const {
  std::vector<DiagramViolation> out;
  for (const Node &n : nodes_) {
    size_t deg = incidence_[n.id.value].size();
    if (is_degree_one_role(n.role) && deg != 1) {
      out.push_back({n.id, std::string(role_name(n.role)) + " node has degree " + std::to_string(deg) + ", expected 1"});
    }
    if (n.role == NodeRole::Measure && !outcomes_.count(n.id)) {
      out.push_back({n.id, "measurement node has no outcome id"});
    }
    if (auto *s = std::get_if<Spider>(&n.kind); s && (s->phase < 0 || s->phase > 3)) {
      out.push_back({n.id, "phase not canonical"});
    }
  }
  for (const auto &[node, name] : outcomes_) {
    auto it = outcome_owner_.find(name);
    if (it == outcome_owner_.end() || it->second != node) {
      out.push_back({node, "outcome registry inconsistent for '" + name + "'"});
    }
  }
  return out;
}

}  // namespace foldweb
