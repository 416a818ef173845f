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

#include "foldweb/errors.hpp"
#include "foldweb/lattice.hpp"
#include "foldweb/tableau.hpp"

namespace foldweb {
namespace {

struct FoldCensus {
  size_t data_cz = 0;
  size_t s = 0;
  size_t ancilla_cz = 0;
  size_t sdg = 0;
  size_t idle_ancillas = 0;
};

FoldCensus census(const Lattice &lat) {
  FoldCensus out;
  int n_data = lat.distance() * lat.distance();
  std::set<int> touched;
  for (const Gate &g : fold_layer(lat)) {
    bool data = g.qubits[0] < n_data;
    for (int q : g.qubits) {
      touched.insert(q);
    }
    if (g.kind == GateKind::CZ) {
      (data ? out.data_cz : out.ancilla_cz)++;
    } else if (g.kind == GateKind::S) {
      EXPECT_TRUE(data);
      out.s++;
    } else if (g.kind == GateKind::Sdg) {
      EXPECT_FALSE(data);
      out.sdg++;
    } else {
      ADD_FAILURE() << "unexpected " << gate_name(g.kind) << " in the fold layer";
    }
  }
  for (const auto &p : lat.plaquettes()) {
    out.idle_ancillas += !touched.count(p.ancilla);
  }
  return out;
}

// Conjugates p (over all circuit qubits, indexed by id) through the slices.
PauliString through(PauliString p, const std::vector<TimeSlice> &slices) {
  for (const auto &slice : slices) {
    for (const Gate &g : slice) {
      std::vector<size_t> t(g.qubits.begin(), g.qubits.end());
      conjugate(p, g.kind, t);
    }
  }
  return p;
}

PauliString widen(const PauliString &data_op, size_t n) {
  PauliString p(n);
  for (size_t k = 0; k < data_op.size(); k++) {
    p.set(k, data_op.get(k));
  }
  p.phase = data_op.phase;
  return p;
}

size_t total_qubits(const Lattice &lat) {
  return lat.data().size() + lat.plaquettes().size();
}

TEST(Lattice, Counts) {
  for (int d : {3, 5, 7}) {
    Lattice lat = build_lattice(d);
    EXPECT_EQ(lat.data().size(), static_cast<size_t>(d * d));
    ASSERT_EQ(lat.plaquettes().size(), static_cast<size_t>(d * d - 1));
    size_t x = 0;
    size_t weight4 = 0;
    for (const auto &p : lat.plaquettes()) {
      x += p.type == Pauli::X;
      weight4 += p.interior();
      EXPECT_TRUE(p.support.size() == 2 || p.support.size() == 4);
    }
    EXPECT_EQ(x, static_cast<size_t>((d * d - 1) / 2));
    EXPECT_EQ(weight4, static_cast<size_t>((d - 1) * (d - 1)));
  }
}

TEST(Lattice, PrepCountsOfTheYCircuit) {
  CliffordCircuit c = cclp_y_init_circuit(5);
  size_t plus = 0;
  size_t zero = 0;
  for (const Gate &g : c.slices.front()) {
    if (c.qubit(g.qubits[0]).role == QubitRole::Data) {
      EXPECT_EQ(g.kind, GateKind::PrepX);
      continue;
    }
    plus += g.kind == GateKind::PrepX;
    zero += g.kind == GateKind::PrepZ;
  }
  EXPECT_EQ(plus, 12u);
  EXPECT_EQ(zero, 12u);
}

TEST(Lattice, EvenOrSmallDistanceRejected) {
  EXPECT_THROW(build_lattice(4), OddDistanceRequired);
  EXPECT_THROW(build_lattice(1), OddDistanceRequired);
  EXPECT_THROW(cclp_y_init_circuit(2), OddDistanceRequired);
  EXPECT_THROW(encoder_circuit(6, 1), OddDistanceRequired);
}

TEST(Lattice, BoundaryPlaquetteSides) {
  Lattice lat = build_lattice(5);
  for (const auto &p : lat.plaquettes()) {
    if (p.interior()) {
      continue;
    }
    bool left_right = p.corner.col == -1 || p.corner.col == 4;
    EXPECT_EQ(p.type, left_right ? Pauli::X : Pauli::Z);
  }
}

TEST(Mirror, TransposeAndFixedPoints) {
  Lattice lat = build_lattice(5);
  EXPECT_EQ(mirror(lat, {0, 4}), (Coord{4, 0}));
  size_t fixed = 0;
  for (Coord c : lat.data()) {
    EXPECT_EQ(mirror(lat, mirror(lat, c)), c);
    fixed += mirror(lat, c) == c;
  }
  EXPECT_EQ(fixed, 5u);
  EXPECT_THROW(mirror(lat, {5, 0}), NotFound);
  for (size_t k = 0; k < lat.plaquettes().size(); k++) {
    auto m = lat.mirror_plaquette(k);
    if (m && *m == k) {
      EXPECT_EQ(lat.plaquettes()[k].type, Pauli::Z);
    }
  }
}

TEST(FoldLayer, CensusAtDistanceFive) {
  FoldCensus c = census(build_lattice(5));
  EXPECT_EQ(c.data_cz, 10u);
  EXPECT_EQ(c.s, 5u);
  EXPECT_EQ(c.ancilla_cz, 6u);
  EXPECT_EQ(c.sdg, 4u);
  EXPECT_EQ(c.idle_ancillas, 8u);
}

TEST(FoldLayer, CensusAtDistanceThree) {
  FoldCensus c = census(build_lattice(3));
  EXPECT_EQ(c.data_cz, 3u);
  EXPECT_EQ(c.s, 3u);
  EXPECT_EQ(c.sdg, 2u);
  // Interior sites (0,1) and (1,0) are the only off-diagonal mirror pair.
  EXPECT_EQ(c.ancilla_cz, 1u);
  EXPECT_EQ(c.idle_ancillas, 4u);
}

TEST(SyndromeRound, CnotCountAndDisjointness) {
  Lattice lat = build_lattice(5);
  auto slices = syndrome_round_slices(lat, RoundPhase::Full);
  ASSERT_EQ(slices.size(), 4u);
  size_t cnots = 0;
  std::set<std::pair<int, int>> pairs;
  for (const auto &slice : slices) {
    std::set<int> used;
    for (const Gate &g : slice) {
      EXPECT_EQ(g.kind, GateKind::CNOT);
      cnots++;
      for (int q : g.qubits) {
        EXPECT_TRUE(used.insert(q).second) << "qubit " << q << " twice in a slice";
      }
      EXPECT_TRUE(pairs.insert({std::min(g.qubits[0], g.qubits[1]), std::max(g.qubits[0], g.qubits[1])}).second);
    }
  }
  size_t weights = 0;
  for (const auto &p : lat.plaquettes()) {
    weights += p.support.size();
  }
  EXPECT_EQ(cnots, weights);
  EXPECT_EQ(cnots, 80u);  // 16 weight-4 plaquettes and 8 weight-2 ones
  EXPECT_EQ(syndrome_round_slices(lat, RoundPhase::FirstHalf).size(), 2u);
  EXPECT_EQ(syndrome_round_slices(lat, RoundPhase::SecondHalf).size(), 2u);
}

TEST(CclpCircuit, ConstantDepth) {
  for (int d : {3, 5, 7, 9}) {
    CliffordCircuit c = cclp_y_init_circuit(d);
    EXPECT_EQ(c.slices.size(), 7u) << "d=" << d;
    EXPECT_EQ(c.outcome_ids().size(), static_cast<size_t>(d * d - 1));
    EXPECT_TRUE(validate_circuit(c).empty());
  }
}

TEST(Encoder, OutcomesAndOpenData) {
  CliffordCircuit c = encoder_circuit(3, 1);
  EXPECT_EQ(c.outcome_ids().size(), 8u);
  for (const auto &q : c.qubits) {
    EXPECT_EQ(q.open_input, q.role == QubitRole::Data);
    EXPECT_EQ(q.open_output, q.role == QubitRole::Data);
  }
  EXPECT_EQ(encoder_circuit(3, 2).outcome_ids().size(), 16u);
  EXPECT_TRUE(validate_circuit(encoder_circuit(5, 2)).empty());
}

TEST(TransversalInit, PlusStateCarriesLogicalX) {
  Lattice lat = build_lattice(3);
  RunOptions opts;
  opts.seed = 7;
  RunResult r = run(transversal_init_circuit(3, Pauli::X), opts);
  EXPECT_EQ(contains_pauli(r.final, logical_rep(lat, Pauli::X)).status, Membership::InGroup);
  EXPECT_EQ(contains_pauli(r.final, logical_rep(lat, Pauli::Z)).status, Membership::AntiCommutes);
}

TEST(LogicalRep, ShapesAtDistanceFive) {
  Lattice lat = build_lattice(5);
  PauliString x = logical_rep(lat, Pauli::X);
  PauliString y = logical_rep(lat, Pauli::Y);
  EXPECT_EQ(x.weight(), 5u);
  for (int c = 0; c < 5; c++) {
    EXPECT_EQ(x.get(lat.data_id({4, c})), Pauli::X);
  }
  EXPECT_EQ(y.weight(), 9u);
  EXPECT_EQ(y.get(lat.data_id({4, 4})), Pauli::Y);
  EXPECT_FALSE(x.commutes(logical_rep(lat, Pauli::Z)));
}

TEST(LatticeProperty, PlaquettesCommuteWithEachOtherAndLogicals) {
  for (int d : {3, 5, 7, 9}) {
    Lattice lat = build_lattice(d);
    std::vector<PauliString> ops;
    for (size_t k = 0; k < lat.plaquettes().size(); k++) {
      ops.push_back(plaquette_operator(lat, k));
    }
    for (size_t a = 0; a < ops.size(); a++) {
      for (size_t b = a + 1; b < ops.size(); b++) {
        ASSERT_TRUE(ops[a].commutes(ops[b])) << "d=" << d << " plaquettes " << a << ", " << b;
      }
      for (Pauli l : {Pauli::X, Pauli::Z, Pauli::Y}) {
        ASSERT_TRUE(ops[a].commutes(logical_rep(lat, l))) << "d=" << d;
      }
    }
    StabTableau group{{}, ops};
    group.qubits.resize(lat.data().size());
    EXPECT_TRUE(group.check_invariants()) << "d=" << d;
  }
}

// Data-only fold: Z plaquettes are fixed and logical X goes to logical Y, but a
// diagonal reflection keeps plaquette type on a rotated lattice, so X plaquettes
// pick up Z on another X support and leave the code. The ancilla half of the
// fold, applied mid-round, is what repairs this.
TEST(LatticeProperty, DataFoldMapsXToYButNeedsTheAncillas) {
  for (int d : {3, 5, 7}) {
    Lattice lat = build_lattice(d);
    size_t n = lat.data().size();
    TimeSlice data_fold;
    for (const Gate &g : fold_layer(lat)) {
      if (g.qubits[0] < static_cast<int>(n)) {
        data_fold.push_back(g);
      }
    }
    StabTableau code{{}, {}};
    code.qubits.resize(n);
    for (size_t k = 0; k < lat.plaquettes().size(); k++) {
      code.generators.push_back(plaquette_operator(lat, k));
    }
    size_t broken = 0;
    for (size_t k = 0; k < code.generators.size(); k++) {
      const PauliString &g = code.generators[k];
      PauliString image = through(g, {data_fold});
      if (lat.plaquettes()[k].type == Pauli::Z) {
        EXPECT_EQ(image, g) << "d=" << d << " " << g.str();
      } else {
        broken += contains_pauli(code, image.unsigned_part()).status != Membership::InGroup;
      }
    }
    EXPECT_EQ(broken, (n - 1) / 2) << "d=" << d;
    PauliString x_image = through(logical_rep(lat, Pauli::X), {data_fold});
    EXPECT_EQ(x_image.unsigned_part(), logical_rep(lat, Pauli::Y).unsigned_part()) << "d=" << d;
  }
}

// Mid-round fold: after the first half of the syndrome round, the fold layer
// (data and ancilla gates) normalizes the half-cycle group generated by the
// plaquettes and the ancillas' preparation stabilizers.
TEST(LatticeProperty, FoldNormalizesTheHalfCycleGroup) {
  for (int d : {3, 5, 7}) {
    Lattice lat = build_lattice(d);
    size_t n = total_qubits(lat);
    auto first = syndrome_round_slices(lat, RoundPhase::FirstHalf);
    StabTableau half{{}, {}};
    half.qubits.resize(n);
    for (size_t k = 0; k < lat.plaquettes().size(); k++) {
      const Plaquette &p = lat.plaquettes()[k];
      half.generators.push_back(through(widen(plaquette_operator(lat, k), n), first));
      PauliString prep(n);
      prep.set(p.ancilla, p.type);
      half.generators.push_back(through(prep, first));
    }
    ASSERT_TRUE(half.check_invariants());
    TimeSlice fold = fold_layer(lat);
    for (const auto &g : half.generators) {
      PauliString image = through(g, {fold}).unsigned_part();
      EXPECT_EQ(contains_pauli(half, image).status, Membership::InGroup) << "d=" << d << " " << g.str();
    }
  }
}

}  // namespace
}  // namespace foldweb
