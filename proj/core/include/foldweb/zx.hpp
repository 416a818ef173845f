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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace foldweb {

struct NodeId {
  uint32_t value = 0;
  auto operator<=>(const NodeId &) const = default;
};

struct EdgeId {
  uint32_t value = 0;
  auto operator<=>(const EdgeId &) const = default;
};

enum class SpiderColor : uint8_t { Z, X };

/// Phased spider. The phase is an integer multiple of pi/2, stored in {0..3}.
struct Spider {
  SpiderColor color = SpiderColor::Z;
  int phase = 0;

  static Spider z(int quarter_turns = 0);
  static Spider x(int quarter_turns = 0);
  bool operator==(const Spider &) const = default;
};

enum class BoundaryDirection : uint8_t { In, Out };

struct Boundary {
  BoundaryDirection direction = BoundaryDirection::In;
  bool operator==(const Boundary &) const = default;
};

using NodeKind = std::variant<Spider, Boundary>;

enum class NodeRole : uint8_t { Internal, Prep, Measure, BoundaryLeg };

const char *role_name(NodeRole role);

/// Provenance: which circuit qubit and time slice produced the node. Input
/// legs sit at slice -1, output legs one past the last slice.
struct NodeTag {
  int qubit = 0;
  int slice = 0;
  bool operator==(const NodeTag &) const = default;
};

struct Node {
  NodeId id;
  NodeKind kind;
  NodeRole role = NodeRole::Internal;
  std::optional<NodeTag> tag;

  bool is_spider() const { return std::holds_alternative<Spider>(kind); }
  const Spider &spider() const { return std::get<Spider>(kind); }
};

struct Edge {
  EdgeId id;
  NodeId u;
  NodeId v;
  bool hadamard = false;

  /// The endpoint with the smaller node id; the Hadamard swap applies at the
  /// other one.
  NodeId first() const { return u < v ? u : v; }
  NodeId other(NodeId n) const { return n == u ? v : u; }
};

struct DiagramViolation {
  NodeId node;
  std::string message;
};

/// Undirected multigraph of spiders and boundary nodes. Nodes and edges are
/// append-only; ids are dense indices in creation order.
class ZxDiagram {
 public:
  /// Adds a node with degree 0. Measure-role nodes need an outcome id, which
  /// must be unique in the diagram (RegistryError otherwise).
  NodeId add_node(NodeKind kind, NodeRole role, std::optional<NodeTag> tag = std::nullopt,
                  std::optional<std::string> outcome = std::nullopt);
  /// Throws NotFound for unknown endpoints, ValidationError for a self-loop
  /// and DegreeViolation when a degree-1 role node already has its edge.
  EdgeId add_edge(NodeId u, NodeId v, bool hadamard = false);

  const std::vector<Node> &nodes() const { return nodes_; }
  const std::vector<Edge> &edges() const { return edges_; }
  const Node &node(NodeId id) const;
  const Edge &edge(EdgeId id) const;
  size_t degree(NodeId id) const { return incident(id).size(); }
  const std::vector<EdgeId> &incident(NodeId id) const;
  bool contains(NodeId id) const { return id.value < nodes_.size(); }

  /// Outcome id registered for a measurement node.
  const std::string &outcome(NodeId measure_node) const;
  const std::map<NodeId, std::string> &outcomes() const { return outcomes_; }
  const std::vector<NodeId> &prep_nodes() const { return preps_; }

  /// Every degree and registry violation; empty means valid.
  std::vector<DiagramViolation> validate() const;
  bool is_valid() const { return validate().empty(); }

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::map<NodeId, std::string> outcomes_;
  std::map<std::string, NodeId> outcome_owner_;
  std::vector<NodeId> preps_;
};

}  // namespace foldweb
