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
#include <set>

#include <gtest/gtest.h>

#include "cwsgraph/graphstate.hpp"
#include "oracles.hpp"

using namespace cwsgraph;

namespace {

Graph to_graph(const oracle::SmallGraph &s) {
    Graph g(s.n);
    for (unsigned a = 0; a < s.n; a++) {
        for (unsigned b = a + 1; b < s.n; b++) {
            if ((s.adj[a] >> b) & 1) g.add_edge(a, b);
        }
    }
    return g;
}

}  // namespace

TEST(Graph, LatticeIsTwiceDimensionRegular) {
    auto g = lattice({4, 5, 3});
    EXPECT_EQ(g.num_vertices(), 60u);
    EXPECT_EQ(g.regular_degree(), std::optional<std::size_t>(6));
    EXPECT_EQ(g.num_edges(), 180u);
}

TEST(Graph, LatticeEdgesAreLeeDistanceOne) {
    std::vector<std::size_t> dims{5, 4};
    auto g = lattice(dims);
    for (std::size_t a = 0; a < g.num_vertices(); a++) {
        for (std::size_t b = 0; b < g.num_vertices(); b++) {
            auto ca = lattice_coordinates(dims, a), cb = lattice_coordinates(dims, b);
            EXPECT_EQ(g.has_edge(a, b), lee_distance(dims, ca, cb) == 1);
        }
    }
}

TEST(Graph, DegenerateSideRejected) {
    try {
        lattice({8, 2});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateSide);
    }
}

TEST(Graph, EdgeValidation) {
    Graph g(3);
    EXPECT_THROW(g.add_edge(1, 1), Error);
    EXPECT_THROW(g.add_edge(0, 3), Error);
}

TEST(Stabilizers, GeneratorsCommuteAndProductsClose) {
    auto g = lattice({3, 4});
    auto sg = stabilizer_generators(g);
    for (std::size_t i = 0; i < sg.size(); i++) {
        for (std::size_t j = 0; j < sg.size(); j++) EXPECT_TRUE(sg[i].commutes_with(sg[j]));
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; t++) {
        auto a = F2Vector::from_mask(12, rng() & 0xfff), b = F2Vector::from_mask(12, rng() & 0xfff);
        EXPECT_EQ(stabilizer_product(sg, a) * stabilizer_product(sg, b), stabilizer_product(sg, a ^ b));
        EXPECT_TRUE(in_stabilizer_group(g, stabilizer_product(g, a)));
    }
    EXPECT_FALSE(in_stabilizer_group(g, PauliWord::from_letters("ZIIIIIIIIIII")));
}

TEST(Uniformity, KnownValues) {
    EXPECT_EQ(uniformity(cycle_graph(5), 4).m, 2u);
    EXPECT_EQ(uniformity(lattice({15}), 4).m, 2u);
    EXPECT_EQ(uniformity(complete_graph(3), 3).m, 1u);
    auto l88 = uniformity(lattice({8, 8}), 5);
    EXPECT_TRUE(l88.exact);
    EXPECT_EQ(l88.m, 4u);
}

TEST(Uniformity, WitnessAttainsReportedWeight) {
    auto g = lattice({15});
    auto u = uniformity(g, 4);
    ASSERT_TRUE(u.exact);
    auto p = stabilizer_product(g, F2Vector::from_support(15, u.witness));
    EXPECT_EQ(p.weight(), u.min_weight);
    EXPECT_EQ(u.witness, (std::vector<std::size_t>{0}));
}

TEST(Uniformity, MatchesFullGroupEnumeration) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; t++) {
        unsigned n = 2 + rng() % 8;
        auto s = oracle::random_graph(n, rng);
        auto g = to_graph(s);
        auto u = uniformity(g, n);
        EXPECT_TRUE(u.exact);
        EXPECT_EQ(u.m, oracle::uniformity(s));
    }
}

TEST(Uniformity, CapBelowMinimumIsLowerBound) {
    auto u = uniformity(lattice({8, 8}), 3);
    EXPECT_FALSE(u.exact);
    EXPECT_EQ(u.m, 3u);
}

TEST(Uniformity, ThreadCountDoesNotChangeResult) {
    auto g = lattice({6, 7});
    auto a = uniformity(g, 4, {1'000'000'000, 1});
    auto b = uniformity(g, 4, {1'000'000'000, 3});
    EXPECT_EQ(a.m, b.m);
    EXPECT_EQ(a.witness, b.witness);
}

TEST(Uniformity, BudgetGuard) {
    try {
        uniformity(lattice({15, 15}), 5, {1000, 1});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::CapTooLargeForBudget);
    }
}

TEST(Uniformity, SmallLatticeSides) {
    // Below side 8 in two dimensions: sides 3 and 4 fall short, 5 to 7 already reach 4.
    const std::size_t expected[] = {2, 3, 4, 4, 4};
    for (std::size_t side = 3; side <= 7; side++) {
        auto g = lattice({side, side});
        auto u = uniformity(g, 5);
        ASSERT_TRUE(u.exact) << side;
        EXPECT_EQ(u.m, expected[side - 3]) << side;
        if (side <= 4) {
            oracle::SmallGraph s{static_cast<unsigned>(g.num_vertices()), {}};
            for (std::size_t i = 0; i < g.num_vertices(); i++) s.adj.push_back(g.neighbors(i).low_word());
            EXPECT_EQ(u.m, oracle::uniformity(s)) << side;
        }
    }
    EXPECT_EQ(uniformity(cycle_graph(4), 3).m, 1u);
    EXPECT_EQ(uniformity(cycle_graph(6), 3).m, 2u);
}
