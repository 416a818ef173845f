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

#include "foldweb/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "foldweb/errors.hpp"

namespace foldweb {

namespace {

constexpr const char *kGreen = "#7fd37f";
constexpr const char *kRed = "#ff8a80";
constexpr const char *kWebX = "#d62728";
constexpr const char *kWebZ = "#2ca02c";
constexpr const char *kHadamard = "#e6c300";

void require_valid(const ZxDiagram &zx, EdgeOverlay overlay) {
  auto violations = zx.validate();
  if (!violations.empty()) {
    throw ValidationError("cannot render invalid diagram: node " + std::to_string(violations.front().node.value) + ": " +
                          violations.front().message);
  }
  if (!overlay.empty() && overlay.size() != zx.edges().size()) {
    throw ValidationError("overlay length does not match edge count");
  }
}

std::string phase_text(int phase) {
  switch (phase) {
    case 1:
      return "π/2";
    case 2:
      return "π";
    case 3:
      return "-π/2";
    default:
      return "";
  }
}

const char *web_color(Pauli p) {
  switch (p) {
    case Pauli::X:
      return kWebX;
    case Pauli::Z:
      return kWebZ;
    default:
      return nullptr;
  }
}

}  // namespace

std::string to_dot(const ZxDiagram &zx, EdgeOverlay overlay) {
  require_valid(zx, overlay);
  std::ostringstream out;
  out << "graph zx {\n";
  out << "  node [shape=circle, style=filled, fontsize=10];\n";
  for (const Node &n : zx.nodes()) {
    out << "  n" << n.id.value << " [";
    if (n.is_spider()) {
      const Spider &s = n.spider();
      bool z = s.color == SpiderColor::Z;
      out << "kind=" << (z ? "Z" : "X") << ", phase=" << s.phase << ", label=\"" << phase_text(s.phase)
          << "\", fillcolor=\"" << (z ? kGreen : kRed) << "\"";
    } else {
      bool in = std::get<Boundary>(n.kind).direction == BoundaryDirection::In;
      out << "kind=boundary, direction=" << (in ? "in" : "out") << ", shape=point";
    }
    out << ", role=" << role_name(n.role);
    if (n.role == NodeRole::Measure) {
      out << ", outcome=\"" << zx.outcome(n.id) << "\"";
    }
    if (n.tag) {
      out << ", qubit=" << n.tag->qubit << ", slice=" << n.tag->slice;
    }
    out << "];\n";
  }
  for (const Edge &e : zx.edges()) {
    out << "  n" << e.u.value << " -- n" << e.v.value << " [id=" << e.id.value;
    if (e.hadamard) {
      out << ", hadamard=true, style=dashed";
    }
    if (!overlay.empty() && overlay[e.id.value] != Pauli::I) {
      Pauli p = overlay[e.id.value];
      out << ", web=\"" << pauli_char(p) << "\", penwidth=3, color=\"";
      if (p == Pauli::Y) {
        out << kWebX << ":" << kWebZ;
      } else {
        out << web_color(p);
      }
      out << "\"";
    } else if (e.hadamard) {
      out << ", color=\"" << kHadamard << "\"";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_svg(const ZxDiagram &zx, EdgeOverlay overlay) {
  require_valid(zx, overlay);
  std::map<int, int> column;
  int min_slice = 0;
  int max_slice = 0;
  for (const Node &n : zx.nodes()) {
    if (n.tag) {
      column.emplace(n.tag->qubit, 0);
      min_slice = std::min(min_slice, n.tag->slice);
      max_slice = std::max(max_slice, n.tag->slice);
    }
  }
  int next_col = 0;
  for (auto &[q, c] : column) {
    c = next_col++;
  }
  constexpr double kDx = 28;
  constexpr double kDy = 44;
  constexpr double kMargin = 30;
  int untagged = 0;
  std::vector<std::pair<double, double>> pos(zx.nodes().size());
  for (const Node &n : zx.nodes()) {
    if (n.tag) {
      pos[n.id.value] = {kMargin + kDx * column[n.tag->qubit], kMargin + kDy * (max_slice - n.tag->slice)};
    } else {
      pos[n.id.value] = {kMargin + kDx * untagged++, kMargin + kDy * (max_slice - min_slice + 1)};
    }
  }
  double width = 2 * kMargin + kDx * std::max(next_col, untagged);
  double height = 2 * kMargin + kDy * (max_slice - min_slice + 2);

  std::ostringstream out;
  char buf[256];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (const Edge &e : zx.edges()) {
    auto [x1, y1] = pos[e.u.value];
    auto [x2, y2] = pos[e.v.value];
    Pauli p = overlay.empty() ? Pauli::I : overlay[e.id.value];
    if (p == Pauli::Y) {
      std::snprintf(buf, sizeof buf,
                    "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"%s\" stroke-width=\"5\"/>\n", x1, y1, x2,
                    y2, kWebX);
      out << buf;
      std::snprintf(buf, sizeof buf,
                    "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"%s\" stroke-width=\"5\" "
                    "stroke-dasharray=\"4,4\"/>\n",
                    x1, y1, x2, y2, kWebZ);
      out << buf;
    } else {
      const char *color = web_color(p);
      std::snprintf(buf, sizeof buf,
                    "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"%s\" stroke-width=\"%d\"/>\n", x1, y1,
                    x2, y2, color ? color : "black", color ? 5 : 1);
      out << buf;
    }
    if (e.hadamard) {
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%.1f\" y=\"%.1f\" width=\"8\" height=\"8\" fill=\"%s\" stroke=\"black\"/>\n",
                    (x1 + x2) / 2 - 4, (y1 + y2) / 2 - 4, kHadamard);
      out << buf;
    }
  }
  for (const Node &n : zx.nodes()) {
    auto [x, y] = pos[n.id.value];
    if (n.is_spider()) {
      const Spider &s = n.spider();
      std::snprintf(buf, sizeof buf, "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"7\" fill=\"%s\" stroke=\"black\"/>\n", x, y,
                    s.color == SpiderColor::Z ? kGreen : kRed);
      out << buf;
      if (s.phase) {
        std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" font-size=\"8\">%s</text>\n", x + 8, y - 6,
                      phase_text(s.phase).c_str());
        out << buf;
      }
    } else {
      std::snprintf(buf, sizeof buf, "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"2\" fill=\"black\"/>\n", x, y);
      out << buf;
    }
  }
  out << "</svg>\n";
  return out.str();
}

uint64_t fnv1a64(std::string_view text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string diagram_hash(const ZxDiagram &zx) { return hex64(fnv1a64(to_dot(zx))); }

}  // namespace foldweb
