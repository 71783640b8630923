// Copyright 2026 The cwsgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <random>

#include <gtest/gtest.h>

#include "cwsgraph/f2core.hpp"

using namespace cwsgraph;

namespace {

F2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    F2Matrix m(rows, cols);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) m.set(r, c, bit(rng));
    }
    return m;
}

}  // namespace

TEST(F2Vector, StringRoundTripAndWeight) {
    auto v = F2Vector::from_string("0110100");
    EXPECT_EQ(v.size(), 7u);
    EXPECT_EQ(v.weight(), 3u);
    EXPECT_EQ(v.to_string(), "0110100");
    EXPECT_EQ(v.support(), (std::vector<std::size_t>{1, 2, 4}));
    EXPECT_EQ(v.first_one(), 1u);
    EXPECT_THROW(F2Vector::from_string("01a"), Error);
}

TEST(F2Vector, FromSupportSetsBitsOnce) {
    auto v = F2Vector::from_support(10, {3, 3, 9});
    EXPECT_EQ(v.support(), (std::vector<std::size_t>{3, 9}));
    EXPECT_THROW(F2Vector::from_support(10, {10}), Error);
}

TEST(F2Vector, XorAcrossWordBoundary) {
    F2Vector a(130), b(130);
    a.set(0);
    a.set(64);
    a.set(129);
    b.set(64);
    b.set(100);
    a ^= b;
    EXPECT_EQ(a.support(), (std::vector<std::size_t>{0, 100, 129}));
    EXPECT_TRUE(a.dot(b) == true);
    F2Vector c(129);
    try {
        a ^= c;
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
    }
}

TEST(F2Vector, RotationIsCyclic) {
    auto v = F2Vector::from_string("10010");
    EXPECT_EQ(v.rotated(1).to_string(), "01001");
    EXPECT_EQ(v.rotated(5), v);
}

TEST(F2Matrix, RankAndNullspaceAreComplementary) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 70;
        auto m = random_matrix(rows, cols, rng);
        auto ns = nullspace(m);
        EXPECT_EQ(rank(m) + ns.rows(), cols);
        EXPECT_EQ(rank(ns), ns.rows());
        for (const auto &v : ns.row_list()) EXPECT_TRUE(m.multiply(v).is_zero());
    }
}

TEST(F2Matrix, RrefHasIdentityAtPivots) {
    std::mt19937_64 rng(11);
    auto m = random_matrix(6, 20, rng);
    auto red = rref(m);
    for (std::size_t r = 0; r < red.pivots.size(); r++) {
        auto col = red.reduced.column(red.pivots[r]);
        EXPECT_EQ(col.support(), (std::vector<std::size_t>{r}));
        if (r > 0) {
            EXPECT_GT(red.pivots[r], red.pivots[r - 1]);
        }
    }
    // Same row space.
    auto both = m;
    for (const auto &row : red.reduced.row_list()) both.append_row(row);
    EXPECT_EQ(rank(both), rank(m));
}

TEST(F2Matrix, SystematicFormStartsWithIdentity) {
    auto g = F2Matrix::from_strings({"1101000", "0110100", "0011010", "0001101"});
    auto sf = systematic_form(g);
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) EXPECT_EQ(sf.matrix.get(r, c), r == c);
    }
    auto back = permute_columns(sf.matrix, invert_permutation(sf.permutation));
    EXPECT_EQ(back, sf.reduced);
    auto dep = F2Matrix::from_strings({"110", "011", "101"});
    try {
        systematic_form(dep);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
    }
}

TEST(F2Matrix, ProductMatchesRowCombination) {
    std::mt19937_64 rng(3);
    auto a = random_matrix(5, 9, rng);
    auto b = random_matrix(9, 4, rng);
    auto ab = a * b;
    for (std::size_t r = 0; r < 5; r++) EXPECT_EQ(ab.row(r), b.combine_rows(a.row(r)));
    EXPECT_EQ(a.transpose().transpose(), a);
}

TEST(PauliWord, LettersAndSymplecticWeight) {
    auto p = PauliWord::from_letters("IXYZ");
    EXPECT_EQ(p.to_letters(), "IXYZ");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(symplectic_weight(p), 3u);
    EXPECT_EQ(p.x().to_string(), "0110");
    EXPECT_EQ(p.z().to_string(), "0011");
}

TEST(PauliWord, CommutationFollowsSymplecticProduct) {
    auto x = PauliWord::from_letters("X");
    auto z = PauliWord::from_letters("Z");
    auto y = PauliWord::from_letters("Y");
    EXPECT_FALSE(x.commutes_with(z));
    EXPECT_FALSE(y.commutes_with(z));
    EXPECT_TRUE(PauliWord::from_letters("XX").commutes_with(PauliWord::from_letters("ZZ")));
    EXPECT_EQ((x * z).to_letters(), "Y");
}
