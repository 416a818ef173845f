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

#include "foldweb/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace foldweb {

BitVec &BitVec::operator^=(const BitVec &other) {
  for (size_t k = 0; k < words_.size(); k++) {
    words_[k] ^= other.words_[k];
  }
  return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
  for (size_t k = 0; k < words_.size(); k++) {
    words_[k] &= other.words_[k];
  }
  return *this;
}

bool BitVec::any() const {
  for (uint64_t w : words_) {
    if (w) {
      return true;
    }
  }
  return false;
}

size_t BitVec::popcount() const {
  size_t total = 0;
  for (uint64_t w : words_) {
    total += std::popcount(w);
  }
  return total;
}

bool BitVec::dot(const BitVec &other) const {
  uint64_t acc = 0;
  for (size_t k = 0; k < words_.size(); k++) {
    acc ^= words_[k] & other.words_[k];
  }
  return std::popcount(acc) & 1;
}

std::optional<size_t> BitVec::first_set() const {
  for (size_t k = 0; k < words_.size(); k++) {
    if (words_[k]) {
      return k * 64 + std::countr_zero(words_[k]);
    }
  }
  return std::nullopt;
}

void BitVec::clear() {
  for (uint64_t &w : words_) {
    w = 0;
  }
}

std::string BitVec::str() const {
  std::string out;
  out.reserve(num_bits_);
  for (size_t k = 0; k < num_bits_; k++) {
    out.push_back(get(k) ? '1' : '0');
  }
  return out;
}

BitVec BitVec::from_str(const std::string &bits) {
  BitVec v(bits.size());
  for (size_t k = 0; k < bits.size(); k++) {
    if (bits[k] == '1') {
      v.set(k, true);
    } else if (bits[k] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

Gf2Matrix Gf2Matrix::identity(size_t n) {
  Gf2Matrix m(n, n);
  for (size_t k = 0; k < n; k++) {
    m.set(k, k, true);
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string> &rows) {
  Gf2Matrix m;
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto &r : rows) {
    if (r.size() != m.cols_) {
      throw std::invalid_argument("ragged GF(2) matrix rows");
    }
    m.rows_.push_back(BitVec::from_str(r));
  }
  return m;
}

void Gf2Matrix::push_row(BitVec row) {
  if (row.size() != cols_) {
    throw std::invalid_argument("row width does not match matrix");
  }
  rows_.push_back(std::move(row));
}

BitVec Gf2Matrix::apply(const BitVec &v) const {
  BitVec out(rows_.size());
  for (size_t r = 0; r < rows_.size(); r++) {
    out.set(r, rows_[r].dot(v));
  }
  return out;
}

namespace {

// Eliminates over the first `pivot_cols` columns only, so an augmented column
// can ride along without ever becoming a pivot.
RrefResult rref_limited(Gf2Matrix m, size_t pivot_cols) {
  RrefResult res;
  size_t next = 0;
  for (size_t c = 0; c < pivot_cols && next < m.num_rows(); c++) {
    size_t found = next;
    while (found < m.num_rows() && !m.get(found, c)) {
      found++;
    }
    if (found == m.num_rows()) {
      continue;
    }
    std::swap(m.row(found), m.row(next));
    for (size_t r = 0; r < m.num_rows(); r++) {
      if (r != next && m.get(r, c)) {
        m.row(r) ^= m.row(next);
      }
    }
    res.pivots.push_back(c);
    next++;
  }
  res.rank = next;
  res.reduced = std::move(m);
  return res;
}

}  // namespace

RrefResult gf2_rref(Gf2Matrix m) {
  size_t cols = m.num_cols();
  return rref_limited(std::move(m), cols);
}

std::vector<BitVec> gf2_nullspace(const Gf2Matrix &m) {
  RrefResult r = gf2_rref(m);
  size_t n = m.num_cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : r.pivots) {
    is_pivot[p] = true;
  }
  Gf2Matrix basis(0, n);
  for (size_t f = 0; f < n; f++) {
    if (is_pivot[f]) {
      continue;
    }
    BitVec v(n);
    v.set(f, true);
    for (size_t k = 0; k < r.rank; k++) {
      if (r.reduced.get(k, f)) {
        v.set(r.pivots[k], true);
      }
    }
    basis.push_row(std::move(v));
  }
  RrefResult canon = gf2_rref(std::move(basis));
  std::vector<BitVec> out;
  out.reserve(canon.rank);
  for (size_t k = 0; k < canon.rank; k++) {
    out.push_back(canon.reduced.row(k));
  }
  return out;
}

std::optional<BitVec> gf2_solve(const Gf2Matrix &m, const BitVec &rhs) {
  if (rhs.size() != m.num_rows()) {
    throw std::invalid_argument("right-hand side length does not match row count");
  }
  size_t n = m.num_cols();
  Gf2Matrix aug(0, n + 1);
  for (size_t r = 0; r < m.num_rows(); r++) {
    BitVec row(n + 1);
    for (size_t c = 0; c < n; c++) {
      if (m.get(r, c)) {
        row.set(c, true);
      }
    }
    row.set(n, rhs.get(r));
    aug.push_row(std::move(row));
  }
  RrefResult red = rref_limited(std::move(aug), n);
  for (size_t r = red.rank; r < red.reduced.num_rows(); r++) {
    if (red.reduced.get(r, n)) {
      return std::nullopt;
    }
  }
  BitVec sol(n);
  for (size_t k = 0; k < red.rank; k++) {
    sol.set(red.pivots[k], red.reduced.get(k, n));
  }
  return sol;
}

}  // namespace foldweb
