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

#include <gtest/gtest.h>

#include <set>

#include "foldweb/circuit.hpp"
#include "foldweb/errors.hpp"
#include "foldweb/lattice.hpp"
#include "foldweb/render.hpp"
#include "generators.hpp"

namespace foldweb {
namespace {

size_t count(const std::string &text, const std::string &needle) {
  size_t n = 0;
  for (size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) {
    n++;
  }
  return n;
}

TEST(ZxDiagram, AddNodeStartsAtDegreeZero) {
  ZxDiagram zx;
  NodeId a = zx.add_node(Spider::z(1), NodeRole::Internal);
  EXPECT_EQ(zx.degree(a), 0u);
  EXPECT_TRUE(zx.is_valid());
}

TEST(ZxDiagram, PhaseIsReducedModFour) {
  ZxDiagram zx;
  NodeId a = zx.add_node(Spider::z(5), NodeRole::Internal);
  EXPECT_EQ(zx.node(a).spider().phase, 1);
  EXPECT_EQ(Spider::x(-1).phase, 3);
  EXPECT_TRUE(zx.is_valid());
}

TEST(ZxDiagram, BoundaryNeedsItsEdge) {
  ZxDiagram zx;
  NodeId leg = zx.add_node(Boundary{BoundaryDirection::Out}, NodeRole::BoundaryLeg);
  EXPECT_FALSE(zx.is_valid());
  zx.add_edge(zx.add_node(Spider::z(), NodeRole::Internal), leg);
  EXPECT_TRUE(zx.is_valid());
}

TEST(ZxDiagram, SecondEdgeOnLegIsRejected) {
  ZxDiagram zx;
  NodeId leg = zx.add_node(Boundary{BoundaryDirection::In}, NodeRole::BoundaryLeg);
  NodeId a = zx.add_node(Spider::z(), NodeRole::Internal);
  NodeId b = zx.add_node(Spider::x(), NodeRole::Internal);
  zx.add_edge(a, leg);
  EXPECT_THROW(zx.add_edge(b, leg), DegreeViolation);
  EXPECT_EQ(zx.degree(leg), 1u);
}

TEST(ZxDiagram, EdgeErrors) {
  ZxDiagram zx;
  NodeId a = zx.add_node(Spider::z(), NodeRole::Internal);
  EXPECT_THROW(zx.add_edge(a, NodeId{7}), NotFound);
  EXPECT_THROW(zx.add_edge(a, a), ValidationError);
}

TEST(ZxDiagram, ParallelEdgesAllowed) {
  ZxDiagram zx;
  NodeId a = zx.add_node(Spider::z(), NodeRole::Internal);
  NodeId b = zx.add_node(Spider::x(), NodeRole::Internal);
  zx.add_edge(a, b);
  zx.add_edge(a, b, true);
  EXPECT_EQ(zx.degree(a), 2u);
  EXPECT_TRUE(zx.is_valid());
}

TEST(ZxDiagram, MeasureOutcomeRegistry) {
  ZxDiagram zx;
  EXPECT_THROW(zx.add_node(Spider::x(), NodeRole::Measure), RegistryError);
  zx.add_node(Spider::x(), NodeRole::Measure, std::nullopt, "m0");
  EXPECT_THROW(zx.add_node(Spider::z(), NodeRole::Measure, std::nullopt, "m0"), RegistryError);
  EXPECT_THROW(zx.add_node(Spider::z(), NodeRole::Internal, std::nullopt, "m1"), RegistryError);
  EXPECT_THROW(zx.add_node(Boundary{}, NodeRole::Internal), ValidationError);
}

TEST(ZxDiagram, GeneratedCclpDiagramIsClean) {
  for (int d : {3, 5}) {
    EXPECT_TRUE(lower_to_zx(cclp_y_init_circuit(d)).diagram.validate().empty()) << "d=" << d;
  }
}

TEST(Dot, EmptyDiagramHasNoStatements) {
  std::string dot = to_dot(ZxDiagram{});
  EXPECT_EQ(dot.rfind("graph zx {", 0), 0u);
  EXPECT_EQ(count(dot, "--"), 0u);
  EXPECT_EQ(count(dot, "n0"), 0u);
  EXPECT_EQ(dot.back(), '\n');
}

TEST(Dot, CnotAndCzGadgets) {
  ZxDiagram zx;
  NodeId c = zx.add_node(Spider::z(), NodeRole::Internal);
  NodeId t = zx.add_node(Spider::x(), NodeRole::Internal);
  zx.add_edge(c, t);
  std::string dot = to_dot(zx);
  EXPECT_EQ(count(dot, "kind="), 2u);
  EXPECT_EQ(count(dot, " -- "), 1u);
  EXPECT_EQ(count(dot, "hadamard"), 0u);

  ZxDiagram cz;
  cz.add_edge(cz.add_node(Spider::z(), NodeRole::Internal), cz.add_node(Spider::z(), NodeRole::Internal), true);
  EXPECT_EQ(count(to_dot(cz), "hadamard=true"), 1u);
}

TEST(Dot, InvalidDiagramIsRejected) {
  ZxDiagram zx;
  zx.add_node(Boundary{}, NodeRole::BoundaryLeg);
  EXPECT_THROW(to_dot(zx), ValidationError);
}

TEST(ZxProperty, DegreeSumAndLegDegrees) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 200; trial++) {
    ZxDiagram zx = testing::random_diagram(rng);
    ASSERT_TRUE(zx.is_valid());
    size_t sum = 0;
    for (const Node &n : zx.nodes()) {
      sum += zx.degree(n.id);
      if (n.role != NodeRole::Internal) {
        EXPECT_EQ(zx.degree(n.id), 1u);
      }
    }
    EXPECT_EQ(sum, 2 * zx.edges().size());
  }
}

// Changing any kind, phase, role or hadamard flag changes the DOT text.
TEST(ZxProperty, DotDistinguishesDiagrams) {
  testing::Rng rng(42);
  for (int trial = 0; trial < 200; trial++) {
    ZxDiagram base = testing::random_diagram(rng);
    std::string text = to_dot(base);
    ZxDiagram phase_changed;
    ZxDiagram edge_changed;
    size_t pick_node = testing::uniform(rng, 0, static_cast<int>(base.nodes().size()) - 1);
    size_t pick_edge = base.edges().empty() ? SIZE_MAX : testing::uniform(rng, 0, static_cast<int>(base.edges().size()) - 1);
    for (const Node &n : base.nodes()) {
      NodeKind kind = n.kind;
      if (n.id.value == pick_node && n.is_spider()) {
        Spider s = n.spider();
        kind = testing::coin(rng) ? Spider{s.color, (s.phase + 1) % 4}
                                  : Spider{s.color == SpiderColor::Z ? SpiderColor::X : SpiderColor::Z, s.phase};
      }
      phase_changed.add_node(kind, n.role, n.tag);
      edge_changed.add_node(n.kind, n.role, n.tag);
    }
    for (const Edge &e : base.edges()) {
      phase_changed.add_edge(e.u, e.v, e.hadamard);
      edge_changed.add_edge(e.u, e.v, e.id.value == pick_edge ? !e.hadamard : e.hadamard);
    }
    if (base.node(NodeId{static_cast<uint32_t>(pick_node)}).is_spider()) {
      EXPECT_NE(to_dot(phase_changed), text);
    }
    if (pick_edge != SIZE_MAX) {
      EXPECT_NE(to_dot(edge_changed), text);
    }
  }
}

TEST(ZxProperty, AddingNeverChangesExistingNodes) {
  testing::Rng rng(43);
  ZxDiagram zx = testing::random_diagram(rng, 6);
  std::vector<Node> before = zx.nodes();
  NodeId extra = zx.add_node(Spider::x(2), NodeRole::Internal);
  zx.add_edge(extra, NodeId{0});  // node 0 is always a spider
  for (size_t k = 0; k < before.size(); k++) {
    EXPECT_EQ(zx.nodes()[k].kind, before[k].kind);
    EXPECT_EQ(zx.nodes()[k].role, before[k].role);
  }
}

}  // namespace
}  // namespace foldweb
