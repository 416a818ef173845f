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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace foldweb {

/// Fixed-length bit vector packed into 64-bit words. Bits past `size()` in the
/// last word are always zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

  size_t size() const { return num_bits_; }
  bool get(size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
  void set(size_t k, bool value) {
    uint64_t mask = uint64_t{1} << (k & 63);
    if (value) {
      words_[k >> 6] |= mask;
    } else {
      words_[k >> 6] &= ~mask;
    }
  }
  void flip(size_t k) { words_[k >> 6] ^= uint64_t{1} << (k & 63); }

  BitVec &operator^=(const BitVec &other);
  BitVec &operator&=(const BitVec &other);
  bool operator==(const BitVec &other) const = default;

  bool any() const;
  size_t popcount() const;
  /// Parity of popcount(*this & other).
  bool dot(const BitVec &other) const;
  std::optional<size_t> first_set() const;
  void clear();

  template <typename F>
  void for_each_set(F &&f) const {
    for (size_t w = 0; w < words_.size(); w++) {
      for (uint64_t bits = words_[w]; bits; bits &= bits - 1) {
        f(w * 64 + static_cast<size_t>(__builtin_ctzll(bits)));
      }
    }
  }

  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> words() { return words_; }

  /// '0'/'1' characters, bit 0 first.
  std::string str() const;
  static BitVec from_str(const std::string &bits);

 private:
  size_t num_bits_ = 0;
  std::vector<uint64_t> words_;
};

/// Dense row-major matrix over GF(2).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
  static Gf2Matrix identity(size_t n);
  static Gf2Matrix from_rows(const std::vector<std::string> &rows);

  size_t num_rows() const { return rows_.size(); }
  size_t num_cols() const { return cols_; }
  const BitVec &row(size_t r) const { return rows_[r]; }
  BitVec &row(size_t r) { return rows_[r]; }
  bool get(size_t r, size_t c) const { return rows_[r].get(c); }
  void set(size_t r, size_t c, bool v) { rows_[r].set(c, v); }
  void push_row(BitVec row);

  /// Product with a column vector.
  BitVec apply(const BitVec &v) const;

  bool operator==(const Gf2Matrix &other) const = default;

 private:
  size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

struct RrefResult {
  Gf2Matrix reduced;
  size_t rank = 0;
  std::vector<size_t> pivots;
};

/// Reduced row-echelon form. Columns are scanned left to right; the pivot for
/// each column is the topmost remaining row holding a one there. Zero rows end
/// up at the bottom.
RrefResult gf2_rref(Gf2Matrix m);

/// Basis of {v : m v = 0}, itself in reduced row-echelon form so that the
/// basis order is canonical (pivots ascending).
std::vector<BitVec> gf2_nullspace(const Gf2Matrix &m);

/// One solution of m v = rhs with every free variable set to zero, or nullopt
/// when the system is inconsistent.
std::optional<BitVec> gf2_solve(const Gf2Matrix &m, const BitVec &rhs);

}  // namespace foldweb
