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

#ifndef CWSGRAPH_GRAPHSTATE_HPP
#define CWSGRAPH_GRAPHSTATE_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cwsgraph/detail/combinatorics.hpp"
#include "cwsgraph/errors.hpp"
#include "cwsgraph/f2core.hpp"

namespace cwsgraph {

/// Undirected simple graph on vertices [0, n) with bitset adjacency.
class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t n) : adjacency_(n, F2Vector(n)) {
    }

    static Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
        Graph g(n);
        for (auto [a, b] : edges) g.add_edge(a, b);
        return g;
    }

    std::size_t num_vertices() const noexcept {
        return adjacency_.size();
    }

    void add_edge(std::size_t a, std::size_t b) {
        std::size_t n = num_vertices();
        if (a >= n || b >= n) {
            fail(ErrorCode::IndexOutOfRange, "edge endpoint outside vertex range");
        }
        if (a == b) {
            fail(ErrorCode::InvalidArgument, "self-loops are not allowed");
        }
        adjacency_[a].set(b);
        adjacency_[b].set(a);
    }
    bool has_edge(std::size_t a, std::size_t b) const {
        return adjacency_[a].get(b);
    }

    /// Characteristic vector of N(i).
    const F2Vector &neighbors(std::size_t i) const {
        return adjacency_[i];
    }
    std::size_t degree(std::size_t i) const {
        return adjacency_[i].weight();
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t a = 0; a < num_vertices(); a++) {
            for (auto b : adjacency_[a].support()) {
                if (a < b) out.emplace_back(a, b);
            }
        }
        return out;
    }
    std::size_t num_edges() const {
        std::size_t total = 0;
        for (const auto &row : adjacency_) total += row.weight();
        return total / 2;
    }

    /// Common degree if every vertex has the same degree.
    std::optional<std::size_t> regular_degree() const {
        if (adjacency_.empty()) return 0;
        std::size_t d = degree(0);
        for (std::size_t i = 1; i < num_vertices(); i++) {
            if (degree(i) != d) return std::nullopt;
        }
        return d;
    }

    /// Side lengths when built as a lattice, empty otherwise.
    const std::vector<std::size_t> &lattice_dims() const noexcept {
        return dims_;
    }
    void set_lattice_dims(std::vector<std::size_t> dims) {
        dims_ = std::move(dims);
    }

    bool operator==(const Graph &other) const {
        return adjacency_ == other.adjacency_;
    }

   private:
    std::vector<F2Vector> adjacency_;
    std::vector<std::size_t> dims_;
};

/// Row-major coordinates of a lattice vertex; the last coordinate varies fastest.
inline std::vector<std::size_t> lattice_coordinates(std::span<const std::size_t> dims, std::size_t index) {
    std::vector<std::size_t> coords(dims.size());
    for (std::size_t d = dims.size(); d-- > 0;) {
        coords[d] = index % dims[d];
        index /= dims[d];
    }
    return coords;
}

inline std::size_t lattice_index(std::span<const std::size_t> dims, std::span<const std::size_t> coords) {
    std::size_t index = 0;
    for (std::size_t d = 0; d < dims.size(); d++) index = index * dims[d] + coords[d];
    return index;
}

/// Wrap-around distance Σ min(|x_i - y_i|, n_i - |x_i - y_i|).
inline std::size_t lee_distance(std::span<const std::size_t> dims, std::span<const std::size_t> x,
                                std::span<const std::size_t> y) {
    std::size_t total = 0;
    for (std::size_t d = 0; d < dims.size(); d++) {
        std::size_t diff = x[d] > y[d] ? x[d] - y[d] : y[d] - x[d];
        total += std::min(diff, dims[d] - diff);
    }
    return total;
}

/// Periodic lattice: an edge joins vertices at Lee distance 1.
inline Graph lattice(std::span<const std::size_t> dims) {
    if (dims.empty()) {
        fail(ErrorCode::InvalidArgument, "lattice needs at least one dimension");
    }
    std::size_t n = 1;
    for (auto side : dims) {
        if (side < 3) {
            fail(ErrorCode::DegenerateSide, "lattice sides must be at least 3, got " + std::to_string(side));
        }
        n *= side;
    }
    Graph g(n);
    for (std::size_t v = 0; v < n; v++) {
        auto coords = lattice_coordinates(dims, v);
        for (std::size_t d = 0; d < dims.size(); d++) {
            auto next = coords;
            next[d] = (coords[d] + 1) % dims[d];
            g.add_edge(v, lattice_index(dims, next));
        }
    }
    g.set_lattice_dims(std::vector<std::size_t>(dims.begin(), dims.end()));
    return g;
}

inline Graph lattice(std::initializer_list<std::size_t> dims) {
    return lattice(std::span<const std::size_t>(dims.begin(), dims.size()));
}

inline Graph cycle_graph(std::size_t n) {
    return lattice({n});
}

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; i++) g.add_edge(i, i + 1);
    return g;
}

inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = a + 1; b < n; b++) g.add_edge(a, b);
    }
    return g;
}

/// Generators S_i = X_i Z_{N(i)} of the graph-state stabilizer group.
struct StabilizerGenerators {
    std::vector<PauliWord> gens;

    std::size_t size() const noexcept {
        return gens.size();
    }
    const PauliWord &operator[](std::size_t i) const {
        return gens[i];
    }
};

inline StabilizerGenerators stabilizer_generators(const Graph &g) {
    std::size_t n = g.num_vertices();
    StabilizerGenerators sg;
    sg.gens.reserve(n);
    for (std::size_t i = 0; i < n; i++) {
        F2Vector x(n);
        x.set(i);
        sg.gens.emplace_back(std::move(x), g.neighbors(i));
    }
    return sg;
}

/// Product of S_i over i in T (T given as a characteristic vector).
inline PauliWord stabilizer_product(const StabilizerGenerators &sg, const F2Vector &subset) {
    if (subset.size() != sg.size()) {
        fail(ErrorCode::LengthMismatch, "subset length differs from vertex count");
    }
    PauliWord p(sg.size());
    for (auto i : subset.support()) p *= sg.gens[i];
    return p;
}

inline PauliWord stabilizer_product(const StabilizerGenerators &sg, std::span<const std::size_t> subset) {
    for (auto i : subset) {
        if (i >= sg.size()) fail(ErrorCode::IndexOutOfRange, "subset element outside vertex range");
    }
    return stabilizer_product(sg, F2Vector::from_support(sg.size(), subset));
}

inline PauliWord stabilizer_product(const Graph &g, const F2Vector &subset) {
    if (subset.size() != g.num_vertices()) {
        fail(ErrorCode::LengthMismatch, "subset length differs from vertex count");
    }
    F2Vector z(g.num_vertices());
    for (auto i : subset.support()) z ^= g.neighbors(i);
    return PauliWord(subset, std::move(z));
}

/// A Pauli word lies in the graph-state stabilizer group (up to sign) iff its
/// z part equals that of the unique stabilizer with the same x support.
inline bool in_stabilizer_group(const Graph &g, const PauliWord &p) {
    if (p.size() != g.num_vertices()) {
        fail(ErrorCode::LengthMismatch, "word length differs from vertex count");
    }
    return stabilizer_product(g, p.x()).z() == p.z();
}

struct UniformityOptions {
    std::uint64_t budget = 1'000'000'000;  // maximum subsets examined
    unsigned threads = 1;
};

struct UniformityResult {
    bool exact = false;               // false means "at least cap"
    std::size_t m = 0;                // uniformity, or the cap when !exact
    std::vector<std::size_t> witness; // subset T attaining the minimum weight
    std::size_t min_weight = 0;       // weight of the witness stabilizer
    std::uint64_t subsets_examined = 0;
};

namespace detail {

struct UniformityScan {
    const Graph &g;
    std::size_t best_weight = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best_subset;
    std::vector<std::size_t> stack;

    // Elements are chosen from the top down so that, for fixed upper
    // elements, lower elements increase: this visits subsets in colex order.
    void descend(std::size_t remaining, std::size_t limit, const F2Vector &x, const F2Vector &z) {
        if (remaining == 0) {
            std::size_t weight = (x | z).weight();
            if (weight < best_weight) {
                best_weight = weight;
                best_subset.assign(stack.rbegin(), stack.rend());
            }
            return;
        }
        for (std::size_t v = remaining - 1; v < limit; v++) {
            stack.push_back(v);
            F2Vector x_next = x;
            x_next.set(v);
            descend(remaining - 1, v, x_next, z ^ g.neighbors(v));
            stack.pop_back();
        }
    }
};

}  // namespace detail

/// Minimum weight of a nonidentity stabilizer supported on at most `cap`
/// generators, minus one. Any stabilizer of weight <= cap has x support of
/// size <= cap, so the answer is exact whenever the minimum is <= cap.
inline UniformityResult uniformity(const Graph &g, std::size_t cap, const UniformityOptions &options = {}) {
    if (cap < 1) fail(ErrorCode::InvalidArgument, "uniformity cap must be at least 1");
    std::size_t n = g.num_vertices();
    std::uint64_t total = 0;
    for (std::size_t s = 1; s <= std::min(cap, n); s++) {
        total = detail::saturating_add(total, detail::binomial(n, s));
    }
    if (total > options.budget) {
        fail(ErrorCode::CapTooLargeForBudget, "enumerating " + std::to_string(total) +
                                                  " subsets exceeds the budget of " +
                                                  std::to_string(options.budget));
    }
    UniformityResult result;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t s = 1; s <= std::min(cap, n); s++) {
        // A product of s generators has weight at least s.
        if (s >= best) break;
        std::vector<std::size_t> chunk_weight(n, std::numeric_limits<std::size_t>::max());
        std::vector<std::vector<std::size_t>> chunk_subset(n);
        detail::parallel_tasks(n, options.threads, [&](std::size_t top) {
            if (top + 1 < s) return;
            detail::UniformityScan scan{g, std::numeric_limits<std::size_t>::max(), {}, {top}};
            scan.descend(s - 1, top, F2Vector::from_support(n, {top}), g.neighbors(top));
            chunk_weight[top] = scan.best_weight;
            chunk_subset[top] = std::move(scan.best_subset);
        });
        result.subsets_examined += detail::binomial(n, s);
        for (std::size_t top = 0; top < n; top++) {
            if (chunk_weight[top] < best) {
                best = chunk_weight[top];
                result.witness = chunk_subset[top];
            }
        }
    }
    if (best <= cap) {
        result.exact = true;
        result.min_weight = best;
        result.m = best - 1;
    } else {
        result.exact = false;
        result.m = cap;
        result.min_weight = best;
        result.witness.clear();
    }
    return result;
}

}  // namespace cwsgraph

#endif
