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

#include <algorithm>
#include <numeric>

#include "foldweb/circuit.hpp"
#include "foldweb/errors.hpp"
#include "foldweb/lattice.hpp"
#include "foldweb/pauliweb.hpp"
#include "generators.hpp"

namespace foldweb {
namespace {

CliffordCircuit open_wires(int n, std::vector<TimeSlice> slices) {
  CliffordCircuit c;
  for (int q = 0; q < n; q++) {
    c.qubits.push_back({q, QubitRole::Data, 0, 2 * q, true, true});
  }
  c.slices = std::move(slices);
  return c;
}

// One spider of the given phase with a single output leg.
ZxDiagram state_diagram(int phase) {
  ZxDiagram zx;
  NodeId s = zx.add_node(Spider::z(phase), NodeRole::Internal);
  zx.add_edge(s, zx.add_node(Boundary{BoundaryDirection::Out}, NodeRole::BoundaryLeg));
  return zx;
}

std::vector<Pauli> leg_solutions(const ZxDiagram &zx) {
  std::vector<Pauli> out;
  for (Pauli p : {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y}) {
    PauliWeb w(1);
    w.set(EdgeId{0}, p);
    if (check_web(zx, w).empty()) {
      out.push_back(p);
    }
  }
  return out;
}

std::vector<int> ids(const CliffordCircuit &c) {
  std::vector<int> out;
  for (const auto &q : c.qubits) {
    out.push_back(q.id);
  }
  return out;
}

PauliWeb random_combination(testing::Rng &rng, const std::vector<PauliWeb> &basis, size_t num_edges) {
  PauliWeb w(num_edges);
  for (const auto &b : basis) {
    if (testing::coin(rng)) {
      w ^= b;
    }
  }
  return w;
}

TEST(BuildSystem, PlusStateAllowsX) {
  ZxDiagram zx = state_diagram(0);
  EXPECT_EQ(leg_solutions(zx), (std::vector<Pauli>{Pauli::I, Pauli::X}));
  auto basis = web_basis(zx);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0].label(EdgeId{0}), Pauli::X);
}

TEST(BuildSystem, SPlusStateAllowsY) {
  EXPECT_EQ(leg_solutions(state_diagram(1)), (std::vector<Pauli>{Pauli::I, Pauli::Y}));
}

TEST(BuildSystem, InvalidDiagramRejected) {
  ZxDiagram zx;
  zx.add_node(Boundary{}, NodeRole::BoundaryLeg);
  EXPECT_THROW(build_system(zx), ValidationError);
}

TEST(WebBasis, IdentityWire) {
  ZxDiagram zx;
  zx.add_edge(zx.add_node(Boundary{BoundaryDirection::In}, NodeRole::BoundaryLeg),
              zx.add_node(Boundary{BoundaryDirection::Out}, NodeRole::BoundaryLeg));
  auto basis = web_basis(zx);
  ASSERT_EQ(basis.size(), 2u);
  std::vector<Pauli> labels = {basis[0].label(EdgeId{0}), basis[1].label(EdgeId{0})};
  std::sort(labels.begin(), labels.end());
  EXPECT_EQ(labels, (std::vector<Pauli>{Pauli::X, Pauli::Z}));
}

TEST(WebBasis, CzFlows) {
  CliffordCircuit c = open_wires(2, {{Gate::cz(0, 1)}});
  Lowered low = lower_to_zx(c);
  Gf2System sys = build_system(low.diagram);
  WebPins pins;
  pin_legs(pins, low.legs.input_leg, {0, 1}, PauliString::parse("X_"));
  auto web = solve(low.diagram, sys, pins);
  ASSERT_TRUE(web.has_value());
  auto sig = boundary_signature(low.diagram, low.legs, *web);
  EXPECT_EQ(signature_pauli(sig.outputs, {0, 1}), PauliString::parse("XZ"));
  EXPECT_EQ(web_basis(low.diagram).size(), 4u);
}

TEST(WebBasis, CclpBasisDimensionAndValidity) {
  Lowered low = lower_to_zx(cclp_y_init_circuit(3));
  Gf2System sys = build_system(low.diagram);
  auto basis = web_basis(low.diagram, sys);
  EXPECT_EQ(basis.size(), 2 * low.diagram.edges().size() - gf2_rref(sys.matrix).rank);
  for (const auto &w : basis) {
    EXPECT_TRUE(check_web(low.diagram, w).empty());
  }
}

TEST(Solve, CclpLogicalY) {
  CliffordCircuit c = cclp_y_init_circuit(3);
  Lattice lat = build_lattice(3);
  Lowered low = lower_to_zx(c);
  std::vector<int> data(9);
  std::iota(data.begin(), data.end(), 0);
  WebPins pins;
  pin_legs(pins, low.legs.output_leg, data, logical_rep(lat, Pauli::Y));
  auto web = solve(low.diagram, build_system(low.diagram), pins);
  ASSERT_TRUE(web.has_value());
  EXPECT_TRUE(check_web(low.diagram, *web).empty());
  auto sig = boundary_signature(low.diagram, low.legs, *web);
  EXPECT_EQ(signature_pauli(sig.outputs, data), logical_rep(lat, Pauli::Y));
  for (const auto &m : sig.measurement_support) {
    EXPECT_EQ(m[0], 'm');
  }
}

TEST(Solve, SingleXIsInfeasible) {
  Lowered low = lower_to_zx(cclp_y_init_circuit(3));
  std::vector<int> data(9);
  std::iota(data.begin(), data.end(), 0);
  PauliString x(9);
  x.set(4, Pauli::X);
  WebPins pins;
  pin_legs(pins, low.legs.output_leg, data, x);
  EXPECT_FALSE(solve(low.diagram, build_system(low.diagram), pins).has_value());
}

TEST(Solve, AllLegsPinnedToIdentityGivesEmptyWeb) {
  Lowered low = lower_to_zx(cclp_y_init_circuit(3));
  WebPins pins;
  for (const auto &[q, leg] : low.legs.output_leg) {
    pins[leg] = Pauli::I;
  }
  for (const auto &[node, id] : low.legs.outcome_of) {
    pins[node] = Pauli::I;
  }
  auto web = solve(low.diagram, build_system(low.diagram), pins);
  ASSERT_TRUE(web.has_value());
  EXPECT_TRUE(web->empty());
}

TEST(Solve, PinOnInternalNodeIsNotFound) {
  ZxDiagram zx;
  NodeId a = zx.add_node(Spider::z(), NodeRole::Internal);
  NodeId b = zx.add_node(Spider::z(), NodeRole::Internal);
  NodeId c = zx.add_node(Spider::z(), NodeRole::Internal);
  zx.add_edge(a, b);
  zx.add_edge(a, c);
  EXPECT_THROW(solve(zx, build_system(zx), {{a, Pauli::X}}), NotFound);
}

TEST(CheckWeb, FlippedXBitAtCnotControl) {
  CliffordCircuit c = cclp_y_init_circuit(3);
  Lowered low = lower_to_zx(c);
  auto basis = web_basis(low.diagram);
  ASSERT_FALSE(basis.empty());
  PauliWeb w = basis.front();
  // A degree-3 Z spider is a CNOT control; flip an internal incident edge.
  for (const Node &n : low.diagram.nodes()) {
    if (!n.is_spider() || n.spider().color != SpiderColor::Z || low.diagram.degree(n.id) != 3) {
      continue;
    }
    EdgeId e = low.diagram.incident(n.id).front();
    Pauli l = half_edge_label(low.diagram, w, e, n.id);
    Pauli flipped = make_pauli(!x_bit(l), z_bit(l));
    const Edge &edge = low.diagram.edge(e);
    bool far_side = edge.hadamard && edge.first() != n.id;
    w.set(e, far_side ? swap_xz(flipped) : flipped);
    auto v = check_web(low.diagram, w);
    EXPECT_TRUE(std::any_of(v.begin(), v.end(), [&](const WebViolation &x) {
      return x.spider == n.id && x.kind == ConstraintKind::AllEqual;
    }));
    return;
  }
  FAIL() << "no CNOT control found";
}

TEST(CheckWeb, EvenZParityOnDegreeFourSpider) {
  ZxDiagram zx;
  NodeId s = zx.add_node(Spider::z(), NodeRole::Internal);
  for (int k = 0; k < 4; k++) {
    zx.add_edge(s, zx.add_node(Boundary{BoundaryDirection::Out}, NodeRole::BoundaryLeg));
  }
  PauliWeb w(4);
  w.set(EdgeId{1}, Pauli::Z);
  w.set(EdgeId{3}, Pauli::Z);
  EXPECT_TRUE(check_web(zx, w).empty());
  w.set(EdgeId{0}, Pauli::Z);
  EXPECT_FALSE(check_web(zx, w).empty());
  EXPECT_THROW(check_web(zx, PauliWeb(3)), ShapeError);
}

TEST(Signature, EmptyWeb) {
  Lowered low = lower_to_zx(cclp_y_init_circuit(3));
  auto sig = boundary_signature(low.diagram, low.legs, PauliWeb(low.diagram.edges().size()));
  EXPECT_TRUE(sig.inputs.empty());
  EXPECT_TRUE(sig.outputs.empty());
  EXPECT_TRUE(sig.measurement_support.empty());
  EXPECT_TRUE(sig.prep_anchors.empty());
}

TEST(Signature, InvalidWebThrows) {
  Lowered low = lower_to_zx(cclp_y_init_circuit(3));
  PauliWeb w(low.diagram.edges().size());
  for (const Edge &e : low.diagram.edges()) {
    if (low.diagram.node(e.u).is_spider() && low.diagram.node(e.v).is_spider() &&
        low.diagram.degree(e.u) > 1 && low.diagram.degree(e.v) > 1) {
      w.set(e.id, Pauli::Y);
      break;
    }
  }
  EXPECT_THROW(boundary_signature(low.diagram, low.legs, w), WebInvalid);
}

// The first two slices of the Y circuit, stopped early: top-row X on the data
// outputs is anchored at the top-row data preparations.
TEST(Signature, TopRowXAnchorsAtTopRowPreps) {
  CliffordCircuit c = cclp_y_init_circuit(3);
  c.slices.resize(2);
  for (auto &q : c.qubits) {
    q.open_output = true;
  }
  Lowered low = lower_to_zx(c);
  WebPins pins;
  for (int k = 0; k < 9; k++) {
    pins[low.legs.output_leg.at(k)] = k >= 6 ? Pauli::X : Pauli::I;
  }
  auto web = solve(low.diagram, build_system(low.diagram), pins);
  ASSERT_TRUE(web.has_value());
  auto sig = boundary_signature(low.diagram, low.legs, *web);
  std::vector<int> data_anchors;
  for (NodeId n : sig.prep_anchors) {
    int q = low.legs.qubit_of.at(n);
    if (q < 9) {
      data_anchors.push_back(q);
    }
  }
  std::sort(data_anchors.begin(), data_anchors.end());
  EXPECT_EQ(data_anchors, (std::vector<int>{6, 7, 8}));
}

TEST(WebProperty, HadamardSwapsColours) {
  Lowered low = lower_to_zx(open_wires(1, {{Gate::h(0)}}));
  auto basis = web_basis(low.diagram);
  ASSERT_EQ(basis.size(), 2u);
  for (const auto &w : basis) {
    auto sig = boundary_signature(low.diagram, low.legs, w);
    EXPECT_EQ(sig.outputs.at(0), swap_xz(sig.inputs.at(0)));
  }
}

TEST(WebProperty, XorOfValidWebsIsValid) {
  testing::Rng rng(61);
  for (int trial = 0; trial < 100; trial++) {
    Lowered low = lower_to_zx(testing::random_circuit(rng));
    auto basis = web_basis(low.diagram);
    if (basis.size() < 2) {
      continue;
    }
    PauliWeb a = basis[testing::uniform(rng, 0, static_cast<int>(basis.size()) - 1)];
    a ^= basis[testing::uniform(rng, 0, static_cast<int>(basis.size()) - 1)];
    EXPECT_TRUE(check_web(low.diagram, a).empty());
  }
}

TEST(WebProperty, SolverAndCheckerAgree) {
  testing::Rng rng(62);
  for (int trial = 0; trial < 200; trial++) {
    ZxDiagram zx = testing::random_diagram(rng);
    Gf2System sys = build_system(zx);
    size_t m = zx.edges().size();
    // Random labels: the checker and the matrix give the same verdict.
    for (int k = 0; k < 20; k++) {
      PauliWeb w(m);
      for (size_t e = 0; e < m; e++) {
        w.set(EdgeId{static_cast<uint32_t>(e)}, testing::random_pauli(rng));
      }
      EXPECT_EQ(check_web(zx, w).empty(), !sys.matrix.apply(w.to_bits()).any());
    }
    // Random pins: any solution is valid and honours the pins.
    WebPins pins;
    for (const Node &n : zx.nodes()) {
      if (n.role == NodeRole::BoundaryLeg && testing::coin(rng)) {
        pins[n.id] = testing::random_pauli(rng);
      }
    }
    if (auto w = solve(zx, sys, pins)) {
      EXPECT_TRUE(check_web(zx, *w).empty());
      for (const auto &[node, p] : pins) {
        EXPECT_EQ(half_edge_label(zx, *w, zx.incident(node).front(), node), p);
      }
    }
    for (const auto &w : web_basis(zx, sys)) {
      EXPECT_TRUE(check_web(zx, w).empty());
    }
  }
}

// Every basis web of a measurement-free circuit is a Heisenberg flow.
TEST(WebProperty, SignaturesMatchPropagation) {
  testing::Rng rng(63);
  testing::CircuitShape shape;
  shape.preps = false;
  shape.measurements = false;
  for (int trial = 0; trial < 100; trial++) {
    CliffordCircuit c = testing::random_circuit(rng, shape);
    Lowered low = lower_to_zx(c);
    for (const auto &w : web_basis(low.diagram)) {
      auto sig = boundary_signature(low.diagram, low.legs, w);
      PauliString in = signature_pauli(sig.inputs, ids(c));
      EXPECT_EQ(propagate_pauli(c, in).final.unsigned_part(), signature_pauli(sig.outputs, ids(c)));
    }
  }
}

TEST(WebProperty, SingleEdgePerturbationIsNeverSilent) {
  testing::Rng rng(64);
  int webs = 0;
  while (webs < 100) {
    Lowered low = lower_to_zx(testing::random_circuit(rng));
    size_t m = low.diagram.edges().size();
    auto basis = web_basis(low.diagram);
    PauliWeb w = random_combination(rng, basis, m);
    if (w.empty() || m == 0) {
      continue;
    }
    webs++;
    auto before = boundary_signature(low.diagram, low.legs, w);
    EdgeId e{static_cast<uint32_t>(testing::uniform(rng, 0, static_cast<int>(m) - 1))};
    Pauli l = w.label(e);
    Pauli other = static_cast<Pauli>((static_cast<int>(l) + testing::uniform(rng, 1, 3)) % 4);
    w.set(e, other);
    if (!check_web(low.diagram, w).empty()) {
      continue;
    }
    EXPECT_NE(boundary_signature(low.diagram, low.legs, w), before) << "edge " << e.value;
  }
}

}  // namespace
}  // namespace foldweb
