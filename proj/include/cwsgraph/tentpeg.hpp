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

#ifndef CWSGRAPH_TENTPEG_HPP
#define CWSGRAPH_TENTPEG_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cwsgraph/detail/combinatorics.hpp"
#include "cwsgraph/errors.hpp"
#include "cwsgraph/f2core.hpp"
#include "cwsgraph/gf2m.hpp"

namespace cwsgraph {

enum class CodeFamily { generic, cyclic, two_dim_cyclic };

inline std::string code_family_name(CodeFamily f) {
    switch (f) {
        case CodeFamily::generic: return "generic";
        case CodeFamily::cyclic: return "cyclic";
        case CodeFamily::two_dim_cyclic: return "two_dim_cyclic";
    }
    return "generic";
}

/// Where a code came from; enough to rebuild it.
struct CodeOrigin {
    CodeFamily family = CodeFamily::generic;
    unsigned r = 0;
    std::optional<FieldElement> alpha;
};

/// Binary linear [n, k] code. The parity-check matrix always has full row
/// rank n - k and the generator full row rank k.
class LinearCode {
   public:
    LinearCode() = default;

    /// Dependent rows are removed by row reduction; independent rows are kept as given.
    static LinearCode from_generator(const F2Matrix &g, CodeOrigin origin = {}) {
        LinearCode c;
        auto red = rref(g);
        c.generator_ = red.pivots.size() == g.rows() ? g : red.reduced;
        c.parity_ = nullspace(c.generator_);
        c.origin_ = std::move(origin);
        return c;
    }

    static LinearCode from_parity(const F2Matrix &h, CodeOrigin origin = {}) {
        LinearCode c;
        c.generator_ = nullspace(h);
        c.parity_ = rref(h).reduced;
        c.origin_ = std::move(origin);
        return c;
    }

    std::size_t length() const noexcept {
        return generator_.cols();
    }
    std::size_t dimension() const noexcept {
        return generator_.rows();
    }
    const F2Matrix &generator() const noexcept {
        return generator_;
    }
    const F2Matrix &parity() const noexcept {
        return parity_;
    }
    const CodeOrigin &origin() const noexcept {
        return origin_;
    }

    F2Vector syndrome(const F2Vector &v) const {
        return parity_.multiply(v);
    }
    bool contains(const F2Vector &v) const {
        return syndrome(v).is_zero();
    }
    F2Vector encode(const F2Vector &message) const {
        return generator_.combine_rows(message);
    }

   private:
    F2Matrix generator_;
    F2Matrix parity_;
    CodeOrigin origin_;
};

inline LinearCode repetition_code(std::size_t n) {
    F2Vector ones(n);
    for (std::size_t i = 0; i < n; i++) ones.set(i);
    return LinearCode::from_generator(F2Matrix(n, {ones}));
}

inline LinearCode zero_code(std::size_t n) {
    return LinearCode::from_generator(F2Matrix(0, n));
}

inline void check_dimension(const LinearCode &c, std::size_t expected, const std::string &what) {
    if (c.dimension() != expected) {
        fail(ErrorCode::DimensionMismatch, what + ": rank gives dimension " + std::to_string(c.dimension()) +
                                               ", expected " + std::to_string(expected));
    }
}

/// Binary expansion of one GF(2^m)-valued parity row: m binary rows.
inline void append_expanded_row(F2Matrix &h, const std::vector<std::uint64_t> &values, unsigned m) {
    for (unsigned t = 0; t < m; t++) {
        F2Vector row(values.size());
        for (std::size_t j = 0; j < values.size(); j++) {
            if ((values[j] >> t) & 1) row.set(j);
        }
        h.append_row(std::move(row));
    }
}

/// Checks the hypothesis on α for the cyclic construction; returns a reason when it fails.
inline std::optional<std::string> cyclic_alpha_problem(const FieldElement &alpha) {
    if (!alpha.is_primitive()) return "alpha is not primitive";
    const auto &f = alpha.field();
    std::uint64_t l = f.log_base(alpha.value(), alpha.value() ^ 1);
    if (l % 3 == 2) return "log of 1 + alpha to base alpha is 2 mod 3";
    return std::nullopt;
}

/// Cyclic code of length 2^(2r) - 1 with parity rows (α^j) and (α^(bj)), b = (2^(2r) - 1)/3.
inline LinearCode build_cr(unsigned r, const FieldElement &alpha) {
    if (r < 2) fail(ErrorCode::InvalidArgument, "cyclic construction needs r >= 2");
    const auto &f = alpha.field();
    if (f.degree() != 2 * r) {
        fail(ErrorCode::BadAlpha, "alpha must lie in GF(2^" + std::to_string(2 * r) + ")");
    }
    if (auto problem = cyclic_alpha_problem(alpha)) fail(ErrorCode::BadAlpha, *problem);
    std::size_t n = f.group_order();
    std::uint64_t b = n / 3;
    std::uint64_t alpha_b = f.pow(alpha.value(), b);
    std::vector<std::uint64_t> row1(n), row2(n);
    std::uint64_t p1 = 1, p2 = 1;
    for (std::size_t j = 0; j < n; j++) {
        row1[j] = p1;
        row2[j] = p2;
        p1 = f.mul(p1, alpha.value());
        p2 = f.mul(p2, alpha_b);
    }
    F2Matrix h(0, n);
    append_expanded_row(h, row1, f.degree());
    append_expanded_row(h, row2, f.degree());
    auto code = LinearCode::from_parity(h, CodeOrigin{CodeFamily::cyclic, r, alpha});
    check_dimension(code, n - 2 * r - 2, "cyclic code");
    return code;
}

/// The eleven evaluation points (u, v) of the two-dimensional construction.
inline std::vector<FieldPair> two_dim_points(const FieldElement &alpha) {
    const auto &f = alpha.field();
    std::uint64_t n = f.group_order();
    auto one = f.one();
    auto a = alpha;
    auto a3 = alpha.pow(3);
    auto gamma = alpha.pow(n / 3);
    auto beta = alpha.pow(n / 5);
    return {
        {one, one},      {a, a},           {a, a.inverse()},           {a, one},
        {a3, one},       {one, a},         {one, a3},                  {one, gamma},
        {beta, beta.pow(2)}, {a, a.pow(2)}, {a3, a3.inverse()},
    };
}

struct BuildBudget {
    std::uint64_t max_generator_bits = std::uint64_t{1} << 31;
};

/// Two-dimensional cyclic code of length n^2, n = 2^(4r) - 1. Coordinate
/// (i, j) maps to i·n + j and carries the monomial x^i y^j; its parity
/// column for the point (u, v) is u^i v^j.
inline LinearCode build_cu(unsigned r, const FieldElement &alpha, const BuildBudget &budget = {}) {
    if (r < 1) fail(ErrorCode::InvalidArgument, "two-dimensional construction needs r >= 1");
    const auto &f = alpha.field();
    if (f.degree() != 4 * r) {
        fail(ErrorCode::BadAlpha, "alpha must lie in GF(2^" + std::to_string(4 * r) + ")");
    }
    if (!alpha.is_primitive()) fail(ErrorCode::BadAlpha, "alpha is not primitive");
    std::uint64_t n = f.group_order();
    std::uint64_t len = n * n;
    std::uint64_t k_expected = len - 32 * r - 7;
    if (detail::saturating_mul(len, k_expected) > budget.max_generator_bits) {
        fail(ErrorCode::BudgetExceeded, "generator of the [" + std::to_string(len) + ", " +
                                            std::to_string(k_expected) + "] code needs " +
                                            std::to_string(len * k_expected / 8) + " bytes");
    }
    F2Matrix h(0, len);
    for (const auto &[u, v] : two_dim_points(alpha)) {
        std::vector<std::uint64_t> values(len);
        std::uint64_t ui = 1;
        for (std::uint64_t i = 0; i < n; i++) {
            std::uint64_t val = ui;
            for (std::uint64_t j = 0; j < n; j++) {
                values[i * n + j] = val;
                val = f.mul(val, v.value());
            }
            ui = f.mul(ui, u.value());
        }
        append_expanded_row(h, values, f.degree());
    }
    auto code = LinearCode::from_parity(h, CodeOrigin{CodeFamily::two_dim_cyclic, r, alpha});
    check_dimension(code, k_expected, "two-dimensional cyclic code");
    return code;
}

struct EnumerationOptions {
    std::size_t max_dimension = 24;
};

/// Calls visit(codeword) for every nonzero codeword, in Gray-code order.
template <typename Visit>
void for_each_codeword(const LinearCode &c, Visit &&visit, const EnumerationOptions &options = {}) {
    std::size_t k = c.dimension();
    if (k > options.max_dimension || k >= 63) {
        fail(ErrorCode::BudgetExceeded, "enumerating 2^" + std::to_string(k) + " codewords exceeds the limit 2^" +
                                            std::to_string(options.max_dimension));
    }
    F2Vector word(c.length());
    std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; i++) {
        word ^= c.generator().row(static_cast<std::size_t>(std::countr_zero(i)));
        visit(word);
    }
}

inline std::size_t min_distance_bruteforce(const LinearCode &c, const EnumerationOptions &options = {}) {
    if (c.dimension() == 0) fail(ErrorCode::InvalidArgument, "the zero code has no nonzero codeword");
    std::size_t best = c.length();
    for_each_codeword(c, [&](const F2Vector &w) { best = std::min(best, w.weight()); }, options);
    return best;
}

struct MitmOptions {
    std::uint64_t budget = 300'000'000ULL;  // table entries plus probes
};

namespace detail {

struct HalfSubset {
    std::uint64_t key;                    // folded syndrome, sort key
    std::array<std::uint16_t, 4> items;   // ascending, unused slots = 0xFFFF
    std::uint8_t size;
};

inline std::uint64_t fold_words(std::span<const std::uint64_t> words) {
    std::uint64_t h = 0;
    for (auto w : words) h = (h ^ w) * 0x9E3779B97F4A7C15ULL + (w >> 29);
    return h;
}

/// Visits every subset of [0, n) of size <= max_size (empty set included)
/// together with the XOR of the column syndromes.
template <typename Visit>
void for_each_small_subset(const std::vector<F2Vector> &cols, std::size_t max_size, Visit &&visit) {
    std::size_t n = cols.size();
    std::size_t words = cols.empty() ? 0 : cols[0].words().size();
    std::array<std::uint16_t, 4> items{0xFFFF, 0xFFFF, 0xFFFF, 0xFFFF};
    std::vector<std::vector<std::uint64_t>> acc(max_size + 1, std::vector<std::uint64_t>(words, 0));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
        visit(std::span<const std::uint64_t>(acc[depth]), items, depth);
        if (depth == max_size) return;
        for (std::size_t v = start; v < n; v++) {
            auto src = cols[v].words();
            for (std::size_t w = 0; w < words; w++) acc[depth + 1][w] = acc[depth][w] ^ src[w];
            items[depth] = static_cast<std::uint16_t>(v);
            rec(depth + 1, v + 1);
            items[depth] = 0xFFFF;
        }
    };
    rec(0, 0);
}

}  // namespace detail

/// Exact search for a nonzero codeword of weight <= w_max by meeting in the
/// middle over column syndromes. Returns a minimum-weight such codeword
/// (ties broken by the smallest support), or nothing, which certifies
/// d_min > w_max.
inline std::optional<F2Vector> find_low_weight_codeword(const LinearCode &c, unsigned w_max,
                                                        const MitmOptions &options = {}) {
    if (w_max > 8) fail(ErrorCode::InvalidArgument, "weight limit must be at most 8");
    std::size_t n = c.length();
    if (n > 0xFFFF) fail(ErrorCode::BudgetExceeded, "code length too large for the low-weight search");
    if (w_max == 0 || n == 0 || c.dimension() == 0) return std::nullopt;
    std::size_t low = w_max / 2;
    std::size_t high = (w_max + 1) / 2;
    std::uint64_t table_size = 0, probes = 0;
    for (std::size_t s = 0; s <= low; s++) table_size = detail::saturating_add(table_size, detail::binomial(n, s));
    for (std::size_t s = 1; s <= high; s++) probes = detail::saturating_add(probes, detail::binomial(n, s));
    if (detail::saturating_add(table_size, probes) > options.budget) {
        fail(ErrorCode::BudgetExceeded, "low-weight search needs " + std::to_string(table_size) + " table entries and " +
                                            std::to_string(probes) + " probes");
    }
    std::vector<F2Vector> cols;
    cols.reserve(n);
    for (std::size_t j = 0; j < n; j++) cols.push_back(c.parity().column(j));
    std::size_t words = cols[0].words().size();

    std::vector<detail::HalfSubset> table;
    std::vector<std::uint64_t> table_syndromes;
    table.reserve(table_size);
    table_syndromes.reserve(table_size * words);
    detail::for_each_small_subset(cols, low, [&](std::span<const std::uint64_t> syn, const auto &items, std::size_t size) {
        table.push_back({detail::fold_words(syn), items, static_cast<std::uint8_t>(size)});
        table_syndromes.insert(table_syndromes.end(), syn.begin(), syn.end());
    });
    std::vector<std::uint32_t> order(table.size());
    for (std::uint32_t i = 0; i < order.size(); i++) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return table[a].key < table[b].key;
    });
    std::vector<std::uint64_t> sorted_keys(order.size());
    for (std::size_t i = 0; i < order.size(); i++) sorted_keys[i] = table[order[i]].key;

    std::optional<F2Vector> best;
    auto consider = [&](const F2Vector &cand) {
        if (!best || cand.weight() < best->weight() ||
            (cand.weight() == best->weight() && cand.support() < best->support())) {
            best = cand;
        }
    };
    detail::for_each_small_subset(cols, high, [&](std::span<const std::uint64_t> syn, const auto &items, std::size_t size) {
        if (size == 0) return;
        std::uint64_t key = detail::fold_words(syn);
        auto range = std::equal_range(sorted_keys.begin(), sorted_keys.end(), key);
        for (auto it = range.first; it != range.second; ++it) {
            std::uint32_t idx = order[static_cast<std::size_t>(it - sorted_keys.begin())];
            if (!std::equal(syn.begin(), syn.end(), table_syndromes.begin() + static_cast<std::ptrdiff_t>(idx * words))) {
                continue;
            }
            F2Vector cand(n);
            for (std::size_t t = 0; t < size; t++) cand.flip(items[t]);
            for (std::size_t t = 0; t < table[idx].size; t++) cand.flip(table[idx].items[t]);
            if (cand.is_zero() || cand.weight() > w_max) continue;
            consider(cand);
        }
    });
    return best;
}

/// Best distance statement obtainable within budget.
struct DistanceReport {
    std::optional<std::size_t> exact;
    std::size_t lower_bound = 0;
    std::optional<F2Vector> witness;
    std::string method;
};

inline DistanceReport distance_report(const LinearCode &c, unsigned w_max = 8, const MitmOptions &options = {}) {
    DistanceReport report;
    if (c.dimension() == 0) {
        report.method = "none";
        return report;
    }
    if (c.dimension() <= 20) {
        std::size_t best = c.length() + 1;
        for_each_codeword(c, [&](const F2Vector &w) {
            if (w.weight() < best || (w.weight() == best && w.support() < report.witness->support())) {
                best = w.weight();
                report.witness = w;
            }
        });
        report.exact = best;
        report.lower_bound = best;
        report.method = "enumeration";
        return report;
    }
    report.lower_bound = 1;
    report.method = "none";
    for (unsigned w = 1; w <= std::min(w_max, 8u); w++) {
        try {
            auto found = find_low_weight_codeword(c, w, options);
            report.method = "meet_in_the_middle";
            if (found) {
                report.exact = found->weight();
                report.lower_bound = found->weight();
                report.witness = found;
                return report;
            }
            report.lower_bound = w + 1;
        } catch (const Error &e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
            break;
        }
    }
    return report;
}

/// One template hit of a word. `offset` is the window start i; `second` is
/// j for the two-window template and p for the window-plus-point template.
struct PatternMatch {
    int pattern = 0;
    std::size_t offset = 0;
    std::optional<std::size_t> second;
};

/// Matches a word against the four cyclic complete-word templates:
/// (1) support in {i..i+3}, ones at i and i+3;
/// (2) support in {i..i+4}, ones at i and i+4, zero at i+2;
/// (3) support in {i..i+2} ∪ {j..j+2}, disjoint windows, ones at i, i+2, j, j+2;
/// (4) support in {i..i+2} ∪ {p}, p outside the window, ones at i and i+2.
inline std::vector<PatternMatch> match_patterns(const F2Vector &word) {
    std::vector<PatternMatch> out;
    std::size_t n = word.size();
    if (n == 0) return out;
    auto sup = word.support();
    std::size_t wt = sup.size();
    auto at = [&](std::size_t i) { return word.get(i % n); };
    auto offset_from = [&](std::size_t s, std::size_t i) { return (s + n - i) % n; };
    auto within = [&](std::size_t i, std::size_t span) {
        return std::all_of(sup.begin(), sup.end(), [&](std::size_t s) { return offset_from(s, i) < span; });
    };
    for (auto i : sup) {
        if (n >= 4 && wt <= 4 && at(i + 3) && within(i, 4)) out.push_back({1, i, std::nullopt});
    }
    for (auto i : sup) {
        if (n >= 5 && wt <= 5 && at(i + 4) && !at(i + 2) && within(i, 5)) out.push_back({2, i, std::nullopt});
    }
    if (n >= 6 && wt <= 6) {
        for (auto i : sup) {
            if (!at(i + 2)) continue;
            for (auto j : sup) {
                if (j <= i || !at(j + 2)) continue;
                if (offset_from(j, i) < 3 || offset_from(i, j) < 3) continue;
                bool covered = std::all_of(sup.begin(), sup.end(), [&](std::size_t s) {
                    return offset_from(s, i) < 3 || offset_from(s, j) < 3;
                });
                if (covered) out.push_back({3, i, j});
            }
        }
    }
    for (auto i : sup) {
        if (n < 4 || wt > 4 || !at(i + 2)) continue;
        std::vector<std::size_t> outside;
        for (auto s : sup) {
            if (offset_from(s, i) >= 3) outside.push_back(s);
        }
        if (outside.size() <= 1) {
            out.push_back({4, i, outside.empty() ? std::nullopt : std::optional<std::size_t>(outside[0])});
        }
    }
    return out;
}

struct PatternViolation {
    int pattern = 0;
    F2Vector codeword;
    std::size_t offset = 0;
    std::optional<std::size_t> second;
};

struct PatternReport {
    std::vector<PatternViolation> violations;
    std::uint64_t codewords_scanned = 0;

    bool empty() const noexcept {
        return violations.empty();
    }
};

inline PatternReport pattern_scan(const LinearCode &c, const EnumerationOptions &options = {}) {
    PatternReport report;
    for_each_codeword(c, [&](const F2Vector &w) {
        report.codewords_scanned++;
        for (const auto &m : match_patterns(w)) {
            report.violations.push_back({m.pattern, w, m.offset, m.second});
        }
    }, options);
    return report;
}

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Parameters [[n^D, k, 2D + 1]] with k = n^D - ceil(2D^2 (2D + 1) log2 n).
struct GvParameters {
    BigInt length;
    BigInt dimension;
    unsigned distance = 0;
    BigInt log_term;
    bool feasible = false;
};

/// Smallest K with 2^K >= value, for value >= 1.
inline std::uint64_t ceil_log2(const BigInt &value) {
    if (value <= 1) return 0;
    std::uint64_t msb = boost::multiprecision::msb(value);
    BigInt low_power = BigInt(1) << msb;
    return value == low_power ? msb : msb + 1;
}

inline GvParameters gv_parameters(unsigned d_lattice, std::uint64_t side) {
    if (side < 8) fail(ErrorCode::InvalidArgument, "side length must be at least 8");
    if (d_lattice < 1) fail(ErrorCode::InvalidArgument, "lattice dimension must be at least 1");
    GvParameters p;
    p.length = boost::multiprecision::pow(BigInt(side), d_lattice);
    unsigned c = 2 * d_lattice * d_lattice * (2 * d_lattice + 1);
    // ceil(c · log2 side) is the least K with 2^K >= side^c.
    p.log_term = ceil_log2(boost::multiprecision::pow(BigInt(side), c));
    p.dimension = p.length - p.log_term;
    p.distance = 2 * d_lattice + 1;
    p.feasible = p.dimension > 0;
    return p;
}

struct HammingBound {
    BigRational q;
    bool satisfied = false;
};

/// Q = Σ_{i <= (d-1)/2} C(n, i) 3^i / 2^(n-k).
inline HammingBound hamming_bound_Q(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
    if (d < 1) fail(ErrorCode::InvalidArgument, "distance must be at least 1");
    if (k > n) fail(ErrorCode::InvalidArgument, "dimension exceeds length");
    BigInt numerator = 0;
    BigInt choose = 1;
    BigInt three = 1;
    for (std::uint64_t i = 0; i <= (d - 1) / 2 && i <= n; i++) {
        numerator += choose * three;
        choose = choose * (n - i) / (i + 1);
        three *= 3;
    }
    HammingBound hb;
    hb.q = BigRational(numerator, BigInt(1) << (n - k));
    hb.satisfied = hb.q <= 1;
    return hb;
}

}  // namespace cwsgraph

#endif
