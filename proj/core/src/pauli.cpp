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

#include "foldweb/pauli.hpp"

#include <stdexcept>

namespace foldweb {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I:
      return '_';
    case Pauli::X:
      return 'X';
    case Pauli::Z:
      return 'Z';
    case Pauli::Y:
      return 'Y';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case '_':
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Z':
      return Pauli::Z;
    case 'Y':
      return Pauli::Y;
    default:
      throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
  }
}

PauliString PauliString::parse(std::string_view text) {
  uint8_t phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') {
      phase = 2;
    }
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase = (phase + 1) & 3;
    text.remove_prefix(1);
  }
  PauliString out(text.size());
  for (size_t q = 0; q < text.size(); q++) {
    out.set(q, pauli_from_char(text[q]));
  }
  out.phase = phase;
  return out;
}

bool PauliString::commutes(const PauliString &other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("Pauli strings of different length");
  }
  return xs.dot(other.zs) == zs.dot(other.xs);
}

size_t PauliString::weight() const {
  BitVec support = xs;
  auto w = support.words();
  auto zw = zs.words();
  for (size_t k = 0; k < w.size(); k++) {
    w[k] |= zw[k];
  }
  return support.popcount();
}

int pauli_product_phase(bool x1, bool z1, bool x2, bool z2) {
  // Aaronson-Gottesman g function.
  if (!x1 && !z1) {
    return 0;
  }
  if (x1 && z1) {
    return int(z2) - int(x2);
  }
  if (x1) {
    return int(z2) * (2 * int(x2) - 1);
  }
  return int(x2) * (1 - 2 * int(z2));
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
  if (rhs.size() != size()) {
    throw std::invalid_argument("Pauli strings of different length");
  }
  int acc = phase + rhs.phase;
  for (size_t q = 0; q < size(); q++) {
    acc += pauli_product_phase(xs.get(q), zs.get(q), rhs.xs.get(q), rhs.zs.get(q));
  }
  xs ^= rhs.xs;
  zs ^= rhs.zs;
  phase = static_cast<uint8_t>(((acc % 4) + 4) % 4);
  return *this;
}

int PauliString::sign() const {
  if (phase == 0) {
    return +1;
  }
  if (phase == 2) {
    return -1;
  }
  throw std::logic_error("Pauli string has imaginary phase: " + str());
}

PauliString PauliString::unsigned_part() const {
  PauliString out = *this;
  out.phase = 0;
  return out;
}

std::string PauliString::str() const {
  static constexpr const char *prefix[] = {"+", "+i", "-", "-i"};
  std::string out = prefix[phase & 3];
  for (size_t q = 0; q < size(); q++) {
    out.push_back(pauli_char(get(q)));
  }
  return out;
}

}  // namespace foldweb
