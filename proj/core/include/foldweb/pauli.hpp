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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "foldweb/gf2.hpp"

namespace foldweb {

/// Single-qubit Pauli as (x, z) bits: bit 0 is x, bit 1 is z.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline constexpr bool x_bit(Pauli p) { return static_cast<uint8_t>(p) & 1; }
inline constexpr bool z_bit(Pauli p) { return static_cast<uint8_t>(p) & 2; }
inline constexpr Pauli make_pauli(bool x, bool z) { return static_cast<Pauli>(uint8_t(x) | (uint8_t(z) << 1)); }
/// Exchanges the x and z bits (X <-> Z, Y and I fixed).
inline constexpr Pauli swap_xz(Pauli p) { return make_pauli(z_bit(p), x_bit(p)); }
inline constexpr Pauli operator^(Pauli a, Pauli b) {
  return static_cast<Pauli>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}
char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// A Pauli operator i^phase * P_0 (x) P_1 (x) ... where each factor is one of
/// I, X, Y, Z (Y taken as the Hermitian matrix, so Y = iXZ).
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(size_t num_qubits) : xs(num_qubits), zs(num_qubits) {}

  /// Parses "+XZ_Y", "-XX", "iZ", "-iY". Both '_' and 'I' denote identity.
  static PauliString parse(std::string_view text);

  size_t size() const { return xs.size(); }
  Pauli get(size_t q) const { return make_pauli(xs.get(q), zs.get(q)); }
  void set(size_t q, Pauli p) {
    xs.set(q, x_bit(p));
    zs.set(q, z_bit(p));
  }

  bool commutes(const PauliString &other) const;
  bool is_identity() const { return !xs.any() && !zs.any(); }
  size_t weight() const;

  /// Right-multiplies in place: *this = *this * rhs.
  PauliString &operator*=(const PauliString &rhs);
  friend PauliString operator*(PauliString lhs, const PauliString &rhs) { return lhs *= rhs; }
  bool operator==(const PauliString &other) const = default;

  /// +1 or -1. Throws std::logic_error for a non-Hermitian phase (+-i).
  int sign() const;
  /// Same operator with phase reset to zero.
  PauliString unsigned_part() const;
  bool same_support_and_letters(const PauliString &other) const { return xs == other.xs && zs == other.zs; }

  std::string str() const;

  BitVec xs;
  BitVec zs;
  /// Power of i, always in {0, 1, 2, 3}.
  uint8_t phase = 0;
};

/// Exponent of i picked up by the single-qubit product
/// (x1, z1) * (x2, z2) = i^k (x1 ^ x2, z1 ^ z2), k in {-1, 0, 1}.
int pauli_product_phase(bool x1, bool z1, bool x2, bool z2);

}  // namespace foldweb
