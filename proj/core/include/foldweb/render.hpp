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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "foldweb/pauli.hpp"
#include "foldweb/zx.hpp"

namespace foldweb {

/// Optional per-edge highlight, indexed by edge id and read as the label at
/// the edge's first endpoint. Empty means no overlay.
using EdgeOverlay = std::span<const Pauli>;

/// Graphviz text for a valid diagram: one statement per node then one per
/// edge, both in id order. Throws ValidationError on an invalid diagram.
std::string to_dot(const ZxDiagram &zx, EdgeOverlay overlay = {});

/// SVG drawing with tag coordinates mapped to (x = qubit, y = time upward).
std::string to_svg(const ZxDiagram &zx, EdgeOverlay overlay = {});

/// 64-bit FNV-1a.
uint64_t fnv1a64(std::string_view text);
std::string hex64(uint64_t value);

/// Stable hash of the overlay-free DOT text, as 16 hex digits.
std::string diagram_hash(const ZxDiagram &zx);

}  // namespace foldweb
