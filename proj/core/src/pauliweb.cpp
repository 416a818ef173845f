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

#include "foldweb/pauliweb.hpp"

#include <algorithm>
#include <set>

#include "foldweb/errors.hpp"

namespace foldweb {

namespace {

bool swapped_at(const Edge &e, NodeId at) { return e.hadamard && at != e.first(); }

// Column of the bit a spider of `color` must keep equal on all legs, and of
// the bit that enters its parity, for the half-edge (e, at).
struct HalfEdgeCols {
  size_t common;
  size_t parity;
};

HalfEdgeCols half_edge_cols(const Edge &e, NodeId at, SpiderColor color) {
  size_t x = 2 * e.id.value;
  size_t z = x + 1;
  if (swapped_at(e, at)) {
    std::swap(x, z);
  }
  return color == SpiderColor::Z ? HalfEdgeCols{x, z} : HalfEdgeCols{z, x};
}

}  // namespace

bool PauliWeb::empty() const {
  return std::all_of(labels_.begin(), labels_.end(), [](Pauli p) { return p == Pauli::I; });
}

PauliWeb &PauliWeb::operator^=(const PauliWeb &other) {
  if (other.size() != size()) {
    throw ShapeError("webs over different edge counts");
  }
  for (size_t k = 0; k < labels_.size(); k++) {
    labels_[k] = labels_[k] ^ other.labels_[k];
  }
  return *this;
}

BitVec PauliWeb::to_bits() const {
  BitVec out(2 * labels_.size());
  for (size_t e = 0; e < labels_.size(); e++) {
    out.set(2 * e, x_bit(labels_[e]));
    out.set(2 * e + 1, z_bit(labels_[e]));
  }
  return out;
}

PauliWeb PauliWeb::from_bits(const BitVec &bits) {
  PauliWeb web(bits.size() / 2);
  for (size_t e = 0; e < web.size(); e++) {
    web.labels_[e] = make_pauli(bits.get(2 * e), bits.get(2 * e + 1));
  }
  return web;
}

Pauli half_edge_label(const ZxDiagram &zx, const PauliWeb &web, EdgeId e, NodeId at) {
  const Edge &edge = zx.edge(e);
  Pauli p = web.label(e);
  return swapped_at(edge, at) ? swap_xz(p) : p;
}

const char *constraint_name(ConstraintKind kind) { return kind == ConstraintKind::AllEqual ? "all-equal" : "parity"; }

Gf2System build_system(const ZxDiagram &zx) {
  auto violations = zx.validate();
  if (!violations.empty()) {
    throw ValidationError("diagram invalid at node " + std::to_string(violations.front().node.value) + ": " +
                          violations.front().message);
  }
  Gf2System sys;
  sys.num_edges = zx.edges().size();
  size_t cols = 2 * sys.num_edges;
  sys.matrix = Gf2Matrix(0, cols);
  for (const Node &n : zx.nodes()) {
    if (!n.is_spider() || zx.degree(n.id) == 0) {
      continue;
    }
    const Spider &s = n.spider();
    const auto &inc = zx.incident(n.id);
    HalfEdgeCols first = half_edge_cols(zx.edge(inc[0]), n.id, s.color);
    for (size_t k = 1; k < inc.size(); k++) {
      HalfEdgeCols h = half_edge_cols(zx.edge(inc[k]), n.id, s.color);
      BitVec row(cols);
      row.flip(first.common);
      row.flip(h.common);
      sys.matrix.push_row(std::move(row));
      sys.rows.push_back({n.id, ConstraintKind::AllEqual});
    }
    BitVec row(cols);
    for (EdgeId e : inc) {
      row.flip(half_edge_cols(zx.edge(e), n.id, s.color).parity);
    }
    if (s.phase & 1) {
      row.flip(first.common);
    }
    sys.matrix.push_row(std::move(row));
    sys.rows.push_back({n.id, ConstraintKind::Parity});
  }
  return sys;
}

std::optional<PauliWeb> solve(const ZxDiagram &zx, const Gf2System &system, const WebPins &pins) {
  size_t cols = 2 * system.num_edges;
  if (system.num_edges != zx.edges().size()) {
    throw ShapeError("system was built for a different diagram");
  }
  std::vector<int> fixed(cols, -1);
  for (const auto &[node, pauli] : pins) {
    if (!zx.contains(node)) {
      throw NotFound("pin on unknown node " + std::to_string(node.value));
    }
    const Node &n = zx.node(node);
    if (n.role == NodeRole::Internal || zx.degree(node) != 1) {
      throw NotFound("node " + std::to_string(node.value) + " is not a leg");
    }
    const Edge &e = zx.edge(zx.incident(node)[0]);
    Pauli stored = swapped_at(e, node) ? swap_xz(pauli) : pauli;
    for (size_t b = 0; b < 2; b++) {
      size_t col = 2 * e.id.value + b;
      int value = b == 0 ? x_bit(stored) : z_bit(stored);
      if (fixed[col] >= 0 && fixed[col] != value) {
        return std::nullopt;
      }
      fixed[col] = value;
    }
  }

  std::vector<size_t> free_cols;
  std::vector<size_t> free_index(cols, SIZE_MAX);
  for (size_t c = 0; c < cols; c++) {
    if (fixed[c] < 0) {
      free_index[c] = free_cols.size();
      free_cols.push_back(c);
    }
  }
  const Gf2Matrix &m = system.matrix;
  Gf2Matrix reduced(0, free_cols.size());
  BitVec rhs(m.num_rows());
  for (size_t r = 0; r < m.num_rows(); r++) {
    BitVec row(free_cols.size());
    bool b = false;
    m.row(r).for_each_set([&](size_t c) {
      if (fixed[c] >= 0) {
        b ^= fixed[c] == 1;
      } else {
        row.set(free_index[c], true);
      }
    });
    rhs.set(r, b);
    reduced.push_row(std::move(row));
  }
  auto sol = gf2_solve(reduced, rhs);
  if (!sol) {
    return std::nullopt;
  }
  BitVec full(cols);
  for (size_t c = 0; c < cols; c++) {
    full.set(c, fixed[c] >= 0 ? fixed[c] == 1 : sol->get(free_index[c]));
  }
  return PauliWeb::from_bits(full);
}

std::vector<PauliWeb> web_basis(const ZxDiagram &zx) { return web_basis(zx, build_system(zx)); }

std::vector<PauliWeb> web_basis(const ZxDiagram &zx, const Gf2System &system) {
  if (system.num_edges != zx.edges().size()) {
    throw ShapeError("system was built for a different diagram");
  }
  std::vector<PauliWeb> out;
  for (const BitVec &v : gf2_nullspace(system.matrix)) {
    out.push_back(PauliWeb::from_bits(v));
  }
  return out;
}

std::vector<WebViolation> check_web(const ZxDiagram &zx, const PauliWeb &web) {
  if (web.size() != zx.edges().size()) {
    throw ShapeError("web has " + std::to_string(web.size()) + " labels, diagram has " +
                     std::to_string(zx.edges().size()) + " edges");
  }
  std::vector<WebViolation> out;
  for (const Node &n : zx.nodes()) {
    if (!n.is_spider() || zx.degree(n.id) == 0) {
      continue;
    }
    const Spider &s = n.spider();
    bool red_rule = s.color == SpiderColor::Z;
    bool common = false;
    bool all_equal = true;
    bool parity = false;
    bool first = true;
    for (EdgeId e : zx.incident(n.id)) {
      Pauli p = half_edge_label(zx, web, e, n.id);
      bool c = red_rule ? x_bit(p) : z_bit(p);
      bool q = red_rule ? z_bit(p) : x_bit(p);
      if (first) {
        common = c;
        first = false;
      } else if (c != common) {
        all_equal = false;
      }
      parity ^= q;
    }
    if (s.phase & 1) {
      parity ^= common;
    }
    if (!all_equal) {
      out.push_back({n.id, ConstraintKind::AllEqual});
    }
    if (parity) {
      out.push_back({n.id, ConstraintKind::Parity});
    }
  }
  return out;
}

std::vector<EdgeId> suspect_edges(const ZxDiagram &zx, const std::vector<WebViolation> &violations) {
  std::set<NodeId> bad;
  for (const auto &v : violations) {
    bad.insert(v.spider);
  }
  std::vector<EdgeId> out;
  for (const Edge &e : zx.edges()) {
    bool any = false;
    bool all = true;
    for (NodeId n : {e.u, e.v}) {
      if (!zx.node(n).is_spider()) {
        continue;
      }
      any = true;
      all = all && bad.count(n);
    }
    if (any && all) {
      out.push_back(e.id);
    }
  }
  return out;
}

BoundarySignature boundary_signature(const ZxDiagram &zx, const LegMap &legs, const PauliWeb &web) {
  auto violations = check_web(zx, web);
  if (!violations.empty()) {
    throw WebInvalid("web breaks the " + std::string(constraint_name(violations.front().kind)) + " rule at spider " +
                     std::to_string(violations.front().spider.value));
  }
  auto leg_label = [&](NodeId n) { return half_edge_label(zx, web, zx.incident(n).at(0), n); };
  BoundarySignature sig;
  for (const auto &[q, n] : legs.input_leg) {
    if (Pauli p = leg_label(n); p != Pauli::I) {
      sig.inputs[q] = p;
    }
  }
  for (const auto &[q, n] : legs.output_leg) {
    if (Pauli p = leg_label(n); p != Pauli::I) {
      sig.outputs[q] = p;
    }
  }
  for (const auto &[n, outcome] : legs.outcome_of) {
    if (leg_label(n) != Pauli::I) {
      sig.measurement_support.push_back(outcome);
    }
  }
  sort_outcomes(sig.measurement_support);
  for (const auto &[n, kind] : legs.prep_of) {
    if (leg_label(n) != Pauli::I) {
      sig.prep_anchors.push_back(n);
    }
  }
  return sig;
}

void pin_legs(WebPins &pins, const std::map<int, NodeId> &side, const std::vector<int> &qubits,
              const PauliString &pauli) {
  if (pauli.size() != qubits.size()) {
    throw ShapeError("Pauli length does not match the qubit list");
  }
  for (const auto &[q, node] : side) {
    auto it = std::find(qubits.begin(), qubits.end(), q);
    pins[node] = it == qubits.end() ? Pauli::I : pauli.get(static_cast<size_t>(it - qubits.begin()));
  }
}

PauliString signature_pauli(const std::map<int, Pauli> &side, const std::vector<int> &qubits) {
  PauliString out(qubits.size());
  for (size_t k = 0; k < qubits.size(); k++) {
    if (auto it = side.find(qubits[k]); it != side.end()) {
      out.set(k, it->second);
    }
  }
  return out;
}

}  // namespace foldweb
