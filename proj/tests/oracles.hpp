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


// Naive reference implementations on 64-bit masks, used only by the tests.

#ifndef CWSGRAPH_TESTS_ORACLES_HPP
#define CWSGRAPH_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;
using Amp = std::complex<double>;

struct SmallGraph {
    unsigned n = 0;
    std::vector<Mask> adj;
};

inline SmallGraph random_graph(unsigned n, std::mt19937_64 &rng, double p = 0.5) {
    SmallGraph g{n, std::vector<Mask>(n, 0)};
    std::bernoulli_distribution edge(p);
    for (unsigned a = 0; a < n; a++) {
        for (unsigned b = a + 1; b < n; b++) {
            if (edge(rng)) {
                g.adj[a] |= Mask{1} << b;
                g.adj[b] |= Mask{1} << a;
            }
        }
    }
    return g;
}

inline SmallGraph cycle(unsigned n) {
    SmallGraph g{n, std::vector<Mask>(n, 0)};
    for (unsigned i = 0; i < n; i++) {
        unsigned j = (i + 1) % n;
        g.adj[i] |= Mask{1} << j;
        g.adj[j] |= Mask{1} << i;
    }
    return g;
}

/// All 2^n elements (x, z) of the graph-state stabilizer group.
inline std::vector<std::pair<Mask, Mask>> stabilizer_group(const SmallGraph &g) {
    std::vector<std::pair<Mask, Mask>> out;
    for (Mask t = 0; t < (Mask{1} << g.n); t++) {
        Mask z = 0;
        for (unsigned i = 0; i < g.n; i++) {
            if ((t >> i) & 1) z ^= g.adj[i];
        }
        out.emplace_back(t, z);
    }
    return out;
}

/// All 2^k codewords spanned by the rows.
inline std::vector<Mask> span(const std::vector<Mask> &rows) {
    std::vector<Mask> out{0};
    for (Mask r : rows) {
        std::size_t size = out.size();
        for (std::size_t i = 0; i < size; i++) {
            Mask c = out[i] ^ r;
            if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline unsigned min_weight(const std::vector<Mask> &words) {
    unsigned best = 65;
    for (Mask w : words) {
        if (w) best = std::min(best, static_cast<unsigned>(std::popcount(w)));
    }
    return best;
}

/// Minimum symplectic weight over nonzero elements of W = stabilizers + Z(codewords).
inline unsigned min_weight_w(const SmallGraph &g, const std::vector<Mask> &rows) {
    auto code = span(rows);
    unsigned best = 65;
    for (auto [x, z] : stabilizer_group(g)) {
        for (Mask c : code) {
            Mask zz = z ^ c;
            if (x == 0 && zz == 0) continue;
            best = std::min(best, static_cast<unsigned>(std::popcount(x | zz)));
        }
    }
    return best;
}

/// Scans every Pauli word of weight 1..m over 4^n and tests membership in W.
inline bool verify_by_pauli_scan(const SmallGraph &g, const std::vector<Mask> &rows, unsigned m) {
    auto code = span(rows);
    std::set<std::pair<Mask, Mask>> w;
    for (auto [x, z] : stabilizer_group(g)) {
        for (Mask c : code) w.emplace(x, z ^ c);
    }
    Mask full = (Mask{1} << g.n) - 1;
    for (Mask x = 0; x <= full; x++) {
        for (Mask z = 0; z <= full; z++) {
            if ((x | z) == 0) continue;
            if (static_cast<unsigned>(std::popcount(x | z)) > m) continue;
            if (w.count({x, z})) return false;
        }
    }
    return true;
}

/// Minimum weight of a nonidentity stabilizer, minus one.
inline unsigned uniformity(const SmallGraph &g) {
    unsigned best = 65;
    for (auto [x, z] : stabilizer_group(g)) {
        if (x) best = std::min(best, static_cast<unsigned>(std::popcount(x | z)));
    }
    return best - 1;
}

/// Carry-less multiplication modulo a degree-m polynomial, bit by bit.
inline Mask gf_mul(Mask a, Mask b, Mask modulus, unsigned m) {
    Mask r = 0;
    for (unsigned i = 0; i < m; i++) {
        if ((b >> i) & 1) r ^= a;
        a <<= 1;
        if ((a >> m) & 1) a ^= modulus;
    }
    return r;
}

/// Multiplicative order by repeated multiplication.
inline Mask gf_order(Mask a, Mask modulus, unsigned m) {
    Mask x = a;
    Mask k = 1;
    while (x != 1) {
        x = gf_mul(x, a, modulus, m);
        k++;
        if (k > (Mask{1} << m)) return 0;
    }
    return k;
}

/// log_a(1 + a) by walking powers of a.
inline Mask gf_log_one_plus(Mask a, Mask modulus, unsigned m) {
    Mask target = a ^ 1;
    Mask x = 1;
    for (Mask l = 0; l < (Mask{1} << m); l++) {
        if (x == target) return l;
        x = gf_mul(x, a, modulus, m);
    }
    return ~Mask{0};
}

/// Graph state by explicit CZ gates on |+>^n.
inline std::vector<Amp> graph_state(const SmallGraph &g) {
    std::size_t dim = std::size_t{1} << g.n;
    std::vector<Amp> s(dim, Amp(1.0 / std::sqrt(static_cast<double>(dim)), 0));
    for (unsigned a = 0; a < g.n; a++) {
        for (unsigned b = a + 1; b < g.n; b++) {
            if (!((g.adj[a] >> b) & 1)) continue;
            for (std::size_t i = 0; i < dim; i++) {
                if (((i >> a) & 1) && ((i >> b) & 1)) s[i] = -s[i];
            }
        }
    }
    return s;
}

/// Σ_x payload[x] Z_{xA} |G> with logical bit l selecting row l.
inline std::vector<Amp> code_state(const SmallGraph &g, const std::vector<Mask> &rows, const std::vector<Amp> &payload) {
    auto gs = graph_state(g);
    std::vector<Amp> out(gs.size(), Amp(0, 0));
    for (std::size_t x = 0; x < payload.size(); x++) {
        Mask z = 0;
        for (std::size_t l = 0; l < rows.size(); l++) {
            if ((x >> l) & 1) z ^= rows[l];
        }
        for (std::size_t i = 0; i < gs.size(); i++) {
            double sign = std::popcount(static_cast<Mask>(i) & z) % 2 ? -1.0 : 1.0;
            out[i] += payload[x] * sign * gs[i];
        }
    }
    return out;
}

inline double fidelity(const std::vector<Amp> &a, const std::vector<Amp> &b) {
    Amp ip(0, 0);
    double na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        ip += std::conj(a[i]) * b[i];
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
    }
    return std::norm(ip) / (na * nb);
}

}  // namespace oracle

#endif
