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

#include "cwsgraph/cws.hpp"
#include "cwsgraph/io.hpp"
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

LinearCode code_from_masks(std::size_t n, const std::vector<oracle::Mask> &rows) {
    std::vector<F2Vector> vs;
    for (auto r : rows) vs.push_back(F2Vector::from_mask(n, r));
    return LinearCode::from_generator(F2Matrix(n, vs));
}

std::vector<oracle::Mask> random_rows(unsigned n, unsigned k, std::mt19937_64 &rng) {
    std::vector<oracle::Mask> rows;
    for (unsigned i = 0; i < k; i++) rows.push_back(rng() & ((oracle::Mask{1} << n) - 1));
    return rows;
}

/// Position of the first candidate in W under the documented scan order,
/// counted from 1, or the total count when none is found.
std::uint64_t naive_scan_index(const oracle::SmallGraph &g, const std::vector<oracle::Mask> &rows, unsigned m,
                               bool pure_z) {
    auto code = oracle::span(rows);
    std::set<std::pair<oracle::Mask, oracle::Mask>> w;
    for (auto [x, z] : oracle::stabilizer_group(g)) {
        for (auto c : code) w.emplace(x, z ^ c);
    }
    std::uint64_t index = 0;
    for (unsigned wt = 1; wt <= m; wt++) {
        for (oracle::Mask s = 1; s < (oracle::Mask{1} << g.n); s++) {
            if (static_cast<unsigned>(std::popcount(s)) != wt) continue;
            std::vector<unsigned> pos;
            for (unsigned i = g.n; i-- > 0;) {
                if ((s >> i) & 1) pos.push_back(i);
            }
            std::uint64_t letters = 1;
            for (unsigned i = 0; i < wt; i++) letters *= pure_z ? 1 : 3;
            for (std::uint64_t l = 0; l < letters; l++) {
                index++;
                oracle::Mask x = 0, z = 0;
                std::uint64_t rest = l;
                for (unsigned d = wt; d-- > 0;) {
                    std::uint64_t digit = pure_z ? 2 : rest % 3;
                    if (!pure_z) rest /= 3;
                    oracle::Mask bit = oracle::Mask{1} << pos[d];
                    if (digit != 2) x |= bit;  // X or Y
                    if (digit != 0) z |= bit;  // Y or Z
                }
                if (w.count({x, z})) return index;
            }
        }
    }
    return index;
}

}  // namespace

TEST(CwsCode, LengthMismatch) {
    try {
        CwsCode(cycle_graph(5), repetition_code(6));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
    }
}

TEST(CwsCode, CodeStabilizersOfPathExample) {
    auto g = path_graph(3);
    CwsCode code(g, LinearCode::from_generator(F2Matrix::from_strings({"110"})));
    auto gens = code_stabilizers(code);
    std::set<std::string> group;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << gens.size()); t++) {
        PauliWord p(3);
        for (std::size_t i = 0; i < gens.size(); i++) {
            if ((t >> i) & 1) p *= gens[i];
        }
        group.insert(p.to_letters());
    }
    auto sg = stabilizer_generators(g);
    std::set<std::string> expected{
        "III",
        (sg[0] * sg[1]).to_letters(),
        sg[2].to_letters(),
        (sg[0] * sg[1] * sg[2]).to_letters(),
    };
    EXPECT_EQ(group, expected);
}

TEST(CwsCode, LogicalZIsStabilizerAtInformationPosition) {
    auto code = assemble(lattice({15}), build_cr(2, find_primitive_mod3(make_field(4))));
    auto stabs = code_stabilizers(code);
    for (std::size_t i = 0; i < code.k(); i++) {
        auto z = logical_z(code, i);
        for (const auto &s : stabs) EXPECT_TRUE(z.commutes_with(s));
        // Anticommutes with the logical X = Z_{a_i}.
        auto x = PauliWord::z_string(code.tent_pegs().row(i));
        EXPECT_FALSE(z.commutes_with(x));
    }
    EXPECT_THROW(logical_z(code, code.k()), Error);
}

TEST(Verifier, CyclicCodeOnCycleAtRTwo) {
    auto code = assemble(lattice({15}), build_cr(2, find_primitive_mod3(make_field(4))));
    auto pass = verify_distance(code, 2);
    EXPECT_TRUE(pass.passed());
    EXPECT_EQ(pass.errors_scanned, candidate_count(15, 2));
    auto fail3 = verify_distance(code, 3);
    ASSERT_FALSE(fail3.passed());
    EXPECT_EQ(fail3.violation->witness.weight(), 3u);
    // A pure-Z scan finds the weight-3 codeword on {0, 5, 10}.
    VerifyOptions zo;
    zo.errors = ErrorClass::pure_z;
    auto z3 = verify_distance(code, 3, zo);
    ASSERT_FALSE(z3.passed());
    EXPECT_EQ(z3.violation->witness.z().support(), (std::vector<std::size_t>{0, 5, 10}));
    EXPECT_TRUE(z3.violation->witness.x().is_zero());
}

TEST(Verifier, TrivialViolationOnFiveCycle) {
    auto code = assemble(cycle_graph(5), parse_code_spec("rows:11000"));
    auto c = verify_distance(code, 2);
    ASSERT_FALSE(c.passed());
    const auto &w = c.violation->witness;
    EXPECT_LE(w.weight(), 2u);
    // The witness lies in W: its z part differs from S_x by a codeword.
    auto s = stabilizer_product(code.graph(), w.x());
    EXPECT_TRUE(code.tentpeg().contains(s.z() ^ w.z()));
    EXPECT_EQ(c.violation->codeword, s.z() ^ w.z());
}

TEST(Verifier, AgreesWithNaiveEnumeration) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 200; t++) {
        unsigned n = 2 + rng() % 7;
        unsigned k = rng() % 4;
        auto sg = oracle::random_graph(n, rng);
        auto rows = random_rows(n, k, rng);
        auto code = assemble(to_graph(sg), code_from_masks(n, rows));
        unsigned dmin = oracle::min_weight_w(sg, rows);
        for (unsigned m = 1; m <= std::min(n, 4u); m++) {
            auto cert = verify_distance(code, m);
            ASSERT_EQ(cert.passed(), oracle::verify_by_pauli_scan(sg, rows, m)) << "trial " << t << " m " << m;
            EXPECT_EQ(cert.passed(), dmin > m);
            EXPECT_EQ(cert.errors_scanned, naive_scan_index(sg, rows, m, false));
        }
    }
}

TEST(Verifier, PureZScanOrder) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 50; t++) {
        unsigned n = 3 + rng() % 6;
        auto sg = oracle::random_graph(n, rng);
        auto rows = random_rows(n, 1 + rng() % 3, rng);
        auto code = assemble(to_graph(sg), code_from_masks(n, rows));
        VerifyOptions o;
        o.errors = ErrorClass::pure_z;
        for (unsigned m = 1; m <= std::min(n, 4u); m++) {
            EXPECT_EQ(verify_distance(code, m, o).errors_scanned, naive_scan_index(sg, rows, m, true));
        }
    }
}

TEST(Verifier, ThreadsGiveIdenticalCertificates) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; t++) {
        auto g = lattice({3 + rng() % 4, 3 + rng() % 4});
        std::size_t n = g.num_vertices();
        F2Matrix gen(1 + rng() % 4, n);
        for (std::size_t r = 0; r < gen.rows(); r++) gen.row(r) = F2Vector::from_mask(n, rng() & ((1ull << n) - 1));
        auto code = assemble(g, LinearCode::from_generator(gen));
        VerifyOptions one, many;
        many.threads = 4;
        for (unsigned m = 1; m <= 3; m++) {
            auto a = verify_distance(code, m, one), b = verify_distance(code, m, many);
            EXPECT_EQ(a.passed(), b.passed());
            EXPECT_EQ(a.errors_scanned, b.errors_scanned);
            if (a.violation) {
                EXPECT_EQ(a.violation->witness, b.violation->witness);
            }
        }
    }
}

TEST(Verifier, CycleDifferentialWithPatterns) {
    std::mt19937_64 rng(99);
    int passes = 0;
    for (int t = 0; t < 300; t++) {
        std::size_t n = 5 + rng() % 8;
        std::size_t k = 1 + rng() % 4;
        F2Matrix gen(k, n);
        for (std::size_t r = 0; r < k; r++) {
            // Sparse rows make low-weight and patterned codewords common.
            F2Vector v(n);
            for (int b = 0; b < 4; b++) v.set(rng() % n);
            gen.row(r) = v;
        }
        auto c = LinearCode::from_generator(gen);
        auto code = assemble(cycle_graph(n), c);
        bool expected = min_distance_bruteforce(c) >= 3 && pattern_scan(c).empty();
        bool got = verify_distance(code, 2).passed();
        EXPECT_EQ(got, expected) << "n=" << n << "\n" << c.generator();
        passes += got;
    }
    EXPECT_GT(passes, 0);
}

TEST(Verifier, GuardsAndBudget) {
    auto code = assemble(cycle_graph(5), repetition_code(5));
    EXPECT_THROW(verify_distance(code, 6), Error);
    VerifyOptions tiny;
    tiny.budget = 10;
    try {
        verify_distance(code, 2, tiny);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
}

TEST(Verifier, RecordKeepsStrongestCertificate) {
    auto code = assemble(lattice({15}), build_cr(2, find_primitive_mod3(make_field(4))));
    record(code, verify_distance(code, 1));
    record(code, verify_distance(code, 2));
    record(code, verify_distance(code, 3));
    ASSERT_TRUE(code.certified_distance().has_value());
    EXPECT_EQ(code.certified_distance()->distance, 3u);
    EXPECT_EQ(code.certified_distance()->kind, CertificateKind::exhaustive);
}

TEST(SufficientCondition, RegularGraphs) {
    auto code = assemble(lattice({8, 8}), zero_code(64));
    auto d = sufficient_condition_details(code, 21);
    EXPECT_EQ(d.degree, 4u);
    EXPECT_TRUE(d.uniform_enough);
    EXPECT_TRUE(d.holds);
    EXPECT_FALSE(check_sufficient_condition(code, 20));
    try {
        sufficient_condition_details(assemble(path_graph(4), zero_code(4)), 10);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotRegular);
    }
}

TEST(SufficientCondition, ImpliesExhaustivePass) {
    // 2-regular, 2-uniform, d = 7 > 6: distance at least 3.
    auto c = repetition_code(15);
    auto code = assemble(cycle_graph(15), c);
    ASSERT_TRUE(check_sufficient_condition(code, 15));
    EXPECT_TRUE(verify_distance(code, 2).passed());
}
