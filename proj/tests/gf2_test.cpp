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

#include "foldweb/gf2.hpp"
#include "generators.hpp"

namespace foldweb {
namespace {

using testing::Rng;

// Brute force: every assignment of the n variables.
std::optional<BitVec> brute_solve(const Gf2Matrix &m, const BitVec &rhs) {
  size_t n = m.num_cols();
  for (uint64_t a = 0; a < (uint64_t{1} << n); a++) {
    BitVec v(n);
    for (size_t k = 0; k < n; k++) {
      v.set(k, (a >> k) & 1);
    }
    if (m.apply(v) == rhs) {
      return v;
    }
  }
  return std::nullopt;
}

size_t brute_nullity(const Gf2Matrix &m) {
  size_t n = m.num_cols();
  size_t count = 0;
  for (uint64_t a = 0; a < (uint64_t{1} << n); a++) {
    BitVec v(n);
    for (size_t k = 0; k < n; k++) {
      v.set(k, (a >> k) & 1);
    }
    count += !m.apply(v).any();
  }
  size_t dim = 0;
  while ((size_t{1} << dim) < count) {
    dim++;
  }
  return dim;
}

TEST(BitVec, RoundTripsThroughText) {
  BitVec v = BitVec::from_str("0110010");
  EXPECT_EQ(v.str(), "0110010");
  EXPECT_EQ(v.popcount(), 3u);
  EXPECT_EQ(v.first_set(), 1u);
}

TEST(BitVec, CrossesWordBoundaries) {
  BitVec v(130);
  v.set(0, true);
  v.set(64, true);
  v.set(129, true);
  std::vector<size_t> seen;
  v.for_each_set([&](size_t k) { seen.push_back(k); });
  EXPECT_EQ(seen, (std::vector<size_t>{0, 64, 129}));
  BitVec w(130);
  w.set(129, true);
  EXPECT_TRUE(v.dot(w));
  v ^= w;
  EXPECT_EQ(v.popcount(), 2u);
}

TEST(Rref, KnownMatrix) {
  auto r = gf2_rref(Gf2Matrix::from_rows({"0110", "1100", "1010"}));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<size_t>{0, 1}));
  EXPECT_EQ(r.reduced.row(0).str(), "1010");
  EXPECT_EQ(r.reduced.row(1).str(), "0110");
  EXPECT_FALSE(r.reduced.row(2).any());
}

TEST(Rref, IdentityIsFixed) {
  auto r = gf2_rref(Gf2Matrix::identity(5));
  EXPECT_EQ(r.reduced, Gf2Matrix::identity(5));
  EXPECT_EQ(r.rank, 5u);
}

TEST(Nullspace, KnownKernel) {
  auto basis = gf2_nullspace(Gf2Matrix::from_rows({"1100", "0011"}));
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0].str(), "1100");
  EXPECT_EQ(basis[1].str(), "0011");
}

TEST(Solve, InconsistentSystem) {
  Gf2Matrix m = Gf2Matrix::from_rows({"11", "11"});
  EXPECT_FALSE(gf2_solve(m, BitVec::from_str("10")).has_value());
  auto v = gf2_solve(m, BitVec::from_str("11"));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->str(), "10");  // free variable left at zero
}

TEST(Gf2Property, SolveMatchesBruteForceOnSmallSystems) {
  Rng rng(11);
  for (int trial = 0; trial < 300; trial++) {
    size_t rows = testing::uniform(rng, 1, 14);
    size_t cols = testing::uniform(rng, 1, 12);
    Gf2Matrix m = testing::random_matrix(rng, rows, cols, 0.4);
    BitVec rhs = testing::coin(rng) ? m.apply(testing::random_bits(rng, cols)) : testing::random_bits(rng, rows);
    auto fast = gf2_solve(m, rhs);
    auto slow = brute_solve(m, rhs);
    ASSERT_EQ(fast.has_value(), slow.has_value()) << "trial " << trial;
    if (fast) {
      EXPECT_EQ(m.apply(*fast), rhs);
    }
  }
}

// 20x30 systems restricted to 12 unknowns: the other 18 variables are fixed at
// random and moved to the right-hand side.
TEST(Gf2Property, WideSystemsAgreeOnTwelveVariableSubproblems) {
  Rng rng(12);
  for (int trial = 0; trial < 60; trial++) {
    Gf2Matrix m = testing::random_matrix(rng, 20, 30, 0.3);
    BitVec rhs = testing::random_bits(rng, 20);
    BitVec fixed = testing::random_bits(rng, 30);
    Gf2Matrix sub(20, 12);
    BitVec sub_rhs = rhs;
    for (size_t r = 0; r < 20; r++) {
      bool acc = false;
      for (size_t c = 0; c < 30; c++) {
        if (c < 12) {
          sub.set(r, c, m.get(r, c));
        } else {
          acc ^= m.get(r, c) && fixed.get(c);
        }
      }
      sub_rhs.set(r, sub_rhs.get(r) ^ acc);
    }
    EXPECT_EQ(gf2_solve(sub, sub_rhs).has_value(), brute_solve(sub, sub_rhs).has_value()) << "trial " << trial;
  }
}

TEST(Gf2Property, NullspaceIsKernelOfFullDimension) {
  Rng rng(13);
  for (int trial = 0; trial < 200; trial++) {
    size_t rows = testing::uniform(rng, 1, 10);
    size_t cols = testing::uniform(rng, 1, 12);
    Gf2Matrix m = testing::random_matrix(rng, rows, cols, 0.4);
    auto basis = gf2_nullspace(m);
    for (const auto &v : basis) {
      EXPECT_FALSE(m.apply(v).any());
    }
    EXPECT_EQ(basis.size(), brute_nullity(m));
    Gf2Matrix stacked(0, cols);
    for (const auto &v : basis) {
      stacked.push_row(v);
    }
    EXPECT_EQ(gf2_rref(stacked).rank, basis.size());
    EXPECT_EQ(gf2_rref(m).rank + basis.size(), cols);
  }
}

TEST(Gf2Property, RrefIsIdempotentAndReduced) {
  Rng rng(14);
  for (int trial = 0; trial < 200; trial++) {
    Gf2Matrix m = testing::random_matrix(rng, testing::uniform(rng, 1, 12), testing::uniform(rng, 1, 70), 0.3);
    auto r = gf2_rref(m);
    EXPECT_EQ(gf2_rref(r.reduced).reduced, r.reduced);
    for (size_t k = 0; k < r.rank; k++) {
      for (size_t row = 0; row < m.num_rows(); row++) {
        EXPECT_EQ(r.reduced.get(row, r.pivots[k]), row == k);
      }
    }
  }
}

}  // namespace
}  // namespace foldweb
