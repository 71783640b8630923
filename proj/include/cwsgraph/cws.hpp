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

#ifndef CWSGRAPH_CWS_HPP
#define CWSGRAPH_CWS_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwsgraph/detail/combinatorics.hpp"
#include "cwsgraph/errors.hpp"
#include "cwsgraph/f2core.hpp"
#include "cwsgraph/graphstate.hpp"
#include "cwsgraph/tentpeg.hpp"

namespace cwsgraph {

enum class CertificateKind { none, exhaustive, sufficient_condition };

inline std::string certificate_kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::none: return "none";
        case CertificateKind::exhaustive: return "exhaustive";
        case CertificateKind::sufficient_condition: return "sufficient_condition";
    }
    return "none";
}

struct CertifiedDistance {
    std::size_t distance = 0;
    CertificateKind kind = CertificateKind::none;
    unsigned m = 0;
};

/// A graph state together with a binary code whose Z strings span the code.
class CwsCode {
   public:
    CwsCode(Graph graph, LinearCode code) : graph_(std::move(graph)), code_(std::move(code)) {
        if (graph_.num_vertices() != code_.length()) {
            fail(ErrorCode::LengthMismatch, "graph has " + std::to_string(graph_.num_vertices()) +
                                                " vertices but the code has length " +
                                                std::to_string(code_.length()));
        }
        if (code_.dimension() > 0) {
            systematic_ = systematic_form(code_.generator());
        } else {
            systematic_.matrix = F2Matrix(0, code_.length());
            systematic_.reduced = F2Matrix(0, code_.length());
            for (std::size_t c = 0; c < code_.length(); c++) systematic_.permutation.push_back(c);
        }
    }

    const Graph &graph() const noexcept {
        return graph_;
    }
    const LinearCode &tentpeg() const noexcept {
        return code_;
    }
    std::size_t n() const noexcept {
        return code_.length();
    }
    std::size_t k() const noexcept {
        return code_.dimension();
    }
    const SystematicForm &systematic() const noexcept {
        return systematic_;
    }
    /// Rows a_i in original coordinates; row i has a one at information_set()[i]
    /// and zeros at every other information position.
    const F2Matrix &tent_pegs() const noexcept {
        return systematic_.reduced;
    }
    const std::vector<std::size_t> &information_set() const noexcept {
        return systematic_.pivots;
    }

    const std::optional<CertifiedDistance> &certified_distance() const noexcept {
        return certified_;
    }
    /// Keeps the strongest certificate seen so far.
    void record(const CertifiedDistance &cert) {
        if (!certified_ || cert.distance > certified_->distance) certified_ = cert;
    }

   private:
    Graph graph_;
    LinearCode code_;
    SystematicForm systematic_;
    std::optional<CertifiedDistance> certified_;
};

inline CwsCode assemble(Graph g, LinearCode c) {
    return CwsCode(std::move(g), std::move(c));
}

/// Z^L_i = S_{p_i} where p_i is the i-th information position (0-based i).
inline PauliWord logical_z(const CwsCode &code, std::size_t i) {
    if (i >= code.k()) {
        fail(ErrorCode::IndexOutOfRange, "logical index " + std::to_string(i) + " outside [0, " +
                                             std::to_string(code.k()) + ")");
    }
    F2Vector t(code.n());
    t.set(code.information_set()[i]);
    return stabilizer_product(code.graph(), t);
}

/// Generators of the code's stabilizer group: products S_T over a basis of
/// the T with |T ∩ supp(a_j)| even for every generator row a_j.
inline std::vector<PauliWord> code_stabilizers(const CwsCode &code) {
    std::vector<PauliWord> out;
    F2Matrix basis = code.k() > 0 ? nullspace(code.tentpeg().generator()) : F2Matrix::identity(code.n());
    for (const auto &t : basis.row_list()) out.push_back(stabilizer_product(code.graph(), t));
    return out;
}

enum class ErrorClass { all, pure_z };

struct VerifyOptions {
    unsigned threads = 1;                          // 0 = hardware concurrency
    std::uint64_t budget = 100'000'000'000ULL;     // maximum candidate errors
    unsigned weight_cap = 5;
    ErrorClass errors = ErrorClass::all;
};

struct Violation {
    PauliWord witness;
    F2Vector codeword;  // witness z part XOR the stabilizer z part with the same x support
};

struct DistanceCertificate {
    unsigned m = 0;
    std::optional<Violation> violation;
    std::uint64_t errors_scanned = 0;
    double wall_time_ms = 0;

    bool passed() const noexcept {
        return !violation.has_value();
    }
};

namespace detail {

template <std::size_t W>
using Syndrome = std::array<std::uint64_t, W>;

template <std::size_t W>
inline std::uint64_t syndrome_hash(const Syndrome<W> &s) {
    std::uint64_t h = 0;
    for (auto w : s) h = (h ^ w) * 0x9E3779B97F4A7C15ULL;
    return h ^ (h >> 32);
}

struct Hit {
    std::vector<std::size_t> positions;  // ascending
    std::vector<std::uint8_t> letters;   // letter index per position, same order
    std::uint64_t letter_index = 0;      // odometer index, top position most significant
};

/// Per-position letter syndromes and the lookup table for the lowest position.
template <std::size_t W>
struct VerifierTables {
    std::size_t n = 0;
    std::size_t num_letters = 0;
    std::vector<Syndrome<W>> contrib;  // contrib[p * L + l]
    struct Entry {
        Syndrome<W> syn;
        std::uint32_t pos;
        std::uint8_t letter;
    };
    std::vector<Entry> sorted;
    static constexpr std::size_t kFilterBits = 1u << 16;
    std::vector<std::uint64_t> filter;

    const Entry *find_first(const Syndrome<W> &s) const {
        std::uint64_t h = syndrome_hash<W>(s) & (kFilterBits - 1);
        if (!((filter[h >> 6] >> (h & 63)) & 1)) return nullptr;
        auto it = std::lower_bound(sorted.begin(), sorted.end(), s,
                                   [](const Entry &e, const Syndrome<W> &key) { return e.syn < key; });
        if (it == sorted.end() || it->syn != s) return nullptr;
        return &*it;
    }
};

template <std::size_t W>
VerifierTables<W> build_tables(const CwsCode &code, ErrorClass errors) {
    VerifierTables<W> t;
    t.n = code.n();
    const auto &h = code.tentpeg().parity();
    std::vector<Syndrome<W>> col(t.n, Syndrome<W>{}), nb(t.n, Syndrome<W>{});
    for (std::size_t r = 0; r < h.rows(); r++) {
        for (auto j : h.row(r).support()) col[j][r / 64] ^= std::uint64_t{1} << (r % 64);
    }
    for (std::size_t p = 0; p < t.n; p++) {
        for (auto j : code.graph().neighbors(p).support()) {
            for (std::size_t w = 0; w < W; w++) nb[p][w] ^= col[j][w];
        }
    }
    auto xor_of = [](const Syndrome<W> &a, const Syndrome<W> &b) {
        Syndrome<W> out;
        for (std::size_t w = 0; w < W; w++) out[w] = a[w] ^ b[w];
        return out;
    };
    // Letter order X, Y, Z; pure-Z mode keeps only Z.
    t.num_letters = errors == ErrorClass::all ? 3 : 1;
    for (std::size_t p = 0; p < t.n; p++) {
        if (errors == ErrorClass::all) {
            t.contrib.push_back(nb[p]);
            t.contrib.push_back(xor_of(nb[p], col[p]));
        }
        t.contrib.push_back(col[p]);
    }
    for (std::size_t p = 0; p < t.n; p++) {
        for (std::size_t l = 0; l < t.num_letters; l++) {
            t.sorted.push_back({t.contrib[p * t.num_letters + l], static_cast<std::uint32_t>(p),
                                static_cast<std::uint8_t>(l)});
        }
    }
    std::sort(t.sorted.begin(), t.sorted.end(), [](const auto &a, const auto &b) {
        if (a.syn != b.syn) return a.syn < b.syn;
        if (a.pos != b.pos) return a.pos < b.pos;
        return a.letter < b.letter;
    });
    t.filter.assign(VerifierTables<W>::kFilterBits / 64, 0);
    for (const auto &e : t.sorted) {
        std::uint64_t hv = syndrome_hash<W>(e.syn) & (VerifierTables<W>::kFilterBits - 1);
        t.filter[hv >> 6] |= std::uint64_t{1} << (hv & 63);
    }
    return t;
}

/// Scans all weight-w errors whose top position is `top`, in colex order of
/// the support and odometer order of the letters. Returns the first hit.
template <std::size_t W>
std::optional<Hit> scan_top(const VerifierTables<W> &t, std::size_t w, std::size_t top) {
    const std::size_t L = t.num_letters;
    std::vector<std::size_t> pos(w);  // pos[level], level w-1 is the top
    pos[w - 1] = top;
    // partial[level] holds L^(w - level) syndromes for positions level..w-1.
    std::vector<std::vector<Syndrome<W>>> partial(w + 1);
    partial[w - 1].assign(t.contrib.begin() + static_cast<std::ptrdiff_t>(top * L),
                          t.contrib.begin() + static_cast<std::ptrdiff_t>((top + 1) * L));
    for (std::size_t level = 1; level + 1 < w; level++) {
        std::size_t count = 1;
        for (std::size_t i = level; i < w; i++) count *= L;
        partial[level].resize(count);
    }
    std::optional<Hit> found;
    // Fills the levels below `level + 1` recursively; level 0 uses the table.
    auto rec = [&](auto &&self, std::size_t level) -> bool {
        if (level == 0) {
            const auto &outer = partial[1];
            std::size_t limit = pos[1];
            std::size_t best_pos = std::numeric_limits<std::size_t>::max();
            std::size_t best_outer = 0;
            std::size_t best_letter = 0;
            for (std::size_t pi = 0; pi < outer.size(); pi++) {
                const auto *e = t.find_first(outer[pi]);
                if (e == nullptr || e->pos >= limit) continue;
                if (e->pos < best_pos) {
                    best_pos = e->pos;
                    best_outer = pi;
                    best_letter = e->letter;
                }
            }
            if (best_pos == std::numeric_limits<std::size_t>::max()) return false;
            Hit hit;
            pos[0] = best_pos;
            hit.positions = pos;
            hit.letters.assign(w, 0);
            hit.letters[0] = static_cast<std::uint8_t>(best_letter);
            std::size_t rem = best_outer;
            for (std::size_t level2 = 1; level2 < w; level2++) {
                hit.letters[level2] = static_cast<std::uint8_t>(rem % L);
                rem /= L;
            }
            hit.letter_index = best_outer * L + best_letter;
            found = std::move(hit);
            return true;
        }
        const auto &above = partial[level + 1];
        auto &mine = partial[level];
        for (std::size_t v = level; v < pos[level + 1]; v++) {
            pos[level] = v;
            for (std::size_t a = 0; a < above.size(); a++) {
                for (std::size_t l = 0; l < L; l++) {
                    const auto &c = t.contrib[v * L + l];
                    auto &dst = mine[a * L + l];
                    for (std::size_t x = 0; x < W; x++) dst[x] = above[a][x] ^ c[x];
                }
            }
            if (self(self, level - 1)) return true;
        }
        return false;
    };
    if (w == 1) {
        for (std::size_t l = 0; l < L; l++) {
            const auto &c = t.contrib[top * L + l];
            if (std::all_of(c.begin(), c.end(), [](std::uint64_t x) { return x == 0; })) {
                return Hit{{top}, {static_cast<std::uint8_t>(l)}, l};
            }
        }
        return std::nullopt;
    }
    rec(rec, w - 2);
    return found;
}

template <std::size_t W>
DistanceCertificate verify_with_width(const CwsCode &code, unsigned m, const VerifyOptions &options) {
    auto start = std::chrono::steady_clock::now();
    auto tables = build_tables<W>(code, options.errors);
    const std::size_t n = code.n();
    const std::size_t L = tables.num_letters;
    DistanceCertificate cert;
    cert.m = m;
    std::uint64_t scanned_before = 0;
    for (std::size_t w = 1; w <= std::min<std::size_t>(m, n); w++) {
        std::vector<std::optional<Hit>> hits(n);
        std::atomic<std::size_t> first_top{std::numeric_limits<std::size_t>::max()};
        parallel_tasks(n, options.threads, [&](std::size_t top) {
            if (top + 1 < w || top > first_top.load(std::memory_order_relaxed)) return;
            auto hit = scan_top<W>(tables, w, top);
            if (hit) {
                hits[top] = std::move(hit);
                std::size_t cur = first_top.load();
                while (top < cur && !first_top.compare_exchange_weak(cur, top)) {
                }
            }
        });
        std::size_t ft = first_top.load();
        if (ft != std::numeric_limits<std::size_t>::max()) {
            const auto &hit = *hits[ft];
            PauliWord e(n);
            static constexpr char kAll[3] = {'X', 'Y', 'Z'};
            for (std::size_t i = 0; i < hit.positions.size(); i++) {
                e.set_letter(hit.positions[i], L == 3 ? kAll[hit.letters[i]] : 'Z');
            }
            auto stab = stabilizer_product(code.graph(), e.x());
            cert.violation = Violation{e, e.z() ^ stab.z()};
            std::uint64_t rank = colex_rank(hit.positions);
            cert.errors_scanned = saturating_add(
                scanned_before,
                saturating_add(saturating_mul(rank, saturating_pow(L, static_cast<unsigned>(w))), hit.letter_index + 1));
            break;
        }
        scanned_before = saturating_add(scanned_before,
                                        saturating_mul(binomial(n, w), saturating_pow(L, static_cast<unsigned>(w))));
        cert.errors_scanned = scanned_before;
    }
    cert.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

}  // namespace detail

/// Number of errors of weight 1..m scanned by verify_distance.
inline std::uint64_t candidate_count(std::size_t n, unsigned m, ErrorClass errors = ErrorClass::all) {
    std::uint64_t letters = errors == ErrorClass::all ? 3 : 1;
    std::uint64_t total = 0;
    for (unsigned w = 1; w <= m && w <= n; w++) {
        total = detail::saturating_add(total, detail::saturating_mul(detail::binomial(n, w), detail::saturating_pow(letters, w)));
    }
    return total;
}

/// Decides whether W = V_S + C' has a nonzero vector of symplectic weight <= m.
/// The unique stabilizer with x support T is S_T, so an error E lies in W
/// iff E.z + S_T.z is a codeword, i.e. iff the syndromes of its letters cancel.
inline DistanceCertificate verify_distance(const CwsCode &code, unsigned m, const VerifyOptions &options = {}) {
    if (m > options.weight_cap) {
        fail(ErrorCode::InvalidArgument, "m = " + std::to_string(m) + " exceeds the weight cap " +
                                             std::to_string(options.weight_cap));
    }
    std::uint64_t total = candidate_count(code.n(), m, options.errors);
    if (total > options.budget) {
        fail(ErrorCode::BudgetExceeded, "verification needs " + std::to_string(total) +
                                            " candidates, budget is " + std::to_string(options.budget));
    }
    std::size_t rows = code.tentpeg().parity().rows();
    std::size_t words = std::max<std::size_t>(1, F2Vector::word_count(rows));
    if (words <= 1) return detail::verify_with_width<1>(code, m, options);
    if (words <= 2) return detail::verify_with_width<2>(code, m, options);
    if (words <= 4) return detail::verify_with_width<4>(code, m, options);
    if (words <= 8) return detail::verify_with_width<8>(code, m, options);
    if (words <= 16) return detail::verify_with_width<16>(code, m, options);
    if (words <= 64) return detail::verify_with_width<64>(code, m, options);
    fail(ErrorCode::BudgetExceeded, "parity check has too many rows for the verifier");
}

/// Records an exhaustive certificate on the code when the check passed.
inline void record(CwsCode &code, const DistanceCertificate &cert) {
    if (cert.passed()) code.record({cert.m + 1, CertificateKind::exhaustive, cert.m});
}

struct SufficientConditionCheck {
    bool holds = false;
    std::size_t degree = 0;
    bool uniform_enough = false;
};

/// Sufficient condition: the graph is m-regular, its state is m-uniform and
/// the supplied classical distance exceeds m(m+1).
inline SufficientConditionCheck sufficient_condition_details(const CwsCode &code, std::size_t d_classical,
                                      const UniformityOptions &options = {}) {
    auto deg = code.graph().regular_degree();
    if (!deg) fail(ErrorCode::NotRegular, "graph is not regular");
    SufficientConditionCheck out;
    out.degree = *deg;
    if (*deg == 0) return out;
    auto u = uniformity(code.graph(), *deg, options);
    out.uniform_enough = !u.exact;
    out.holds = out.uniform_enough && d_classical > *deg * (*deg + 1);
    return out;
}

inline bool check_sufficient_condition(const CwsCode &code, std::size_t d_classical, const UniformityOptions &options = {}) {
    return sufficient_condition_details(code, d_classical, options).holds;
}

}  // namespace cwsgraph

#endif
