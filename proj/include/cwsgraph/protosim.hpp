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

#ifndef CWSGRAPH_PROTOSIM_HPP
#define CWSGRAPH_PROTOSIM_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cwsgraph/errors.hpp"
#include "cwsgraph/f2core.hpp"
#include "cwsgraph/graphstate.hpp"

namespace cwsgraph {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxStateQubits = 24;

/// i^phase · X^x · Z^z on qubit masks. Unlike PauliWord the phase is kept,
/// which the controlled-operator protocol needs.
struct PhasedPauli {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    unsigned phase = 0;  // power of i, mod 4

    static PhasedPauli from_word(const PauliWord &w, std::size_t offset = 0) {
        if (w.size() + offset > 64) fail(ErrorCode::TooManyQubits, "Pauli word does not fit a 64-bit mask");
        return {w.x().low_word() << offset, w.z().low_word() << offset, 0};
    }

    /// (i^a X^x1 Z^z1)(i^b X^x2 Z^z2) = i^(a+b) (-1)^(z1·x2) X^(x1+x2) Z^(z1+z2).
    PhasedPauli operator*(const PhasedPauli &o) const {
        unsigned sign = static_cast<unsigned>(std::popcount(z & o.x) & 1);
        return {x ^ o.x, z ^ o.z, (phase + o.phase + 2 * sign) % 4};
    }

    PauliWord word(std::size_t n) const {
        return PauliWord(F2Vector::from_mask(n, x), F2Vector::from_mask(n, z));
    }
};

inline Amplitude i_power(unsigned k) {
    static const Amplitude table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k % 4];
}

/// Dense state on n qubits; bit q of an amplitude index is qubit q.
class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(std::size_t n) : n_(check_size(n)), amps_(std::size_t{1} << n, Amplitude{0, 0}) {
        amps_[0] = 1;
    }
    StateVector(std::size_t n, std::vector<Amplitude> amps) : n_(check_size(n)), amps_(std::move(amps)) {
        if (amps_.size() != (std::size_t{1} << n)) {
            fail(ErrorCode::LengthMismatch, "amplitude count must be 2^n");
        }
    }

    static StateVector basis(std::size_t n, std::uint64_t index) {
        StateVector s(n);
        s.amps_[0] = 0;
        s.amps_[index] = 1;
        return s;
    }
    static StateVector plus(std::size_t n) {
        StateVector s(n);
        double a = std::pow(2.0, -0.5 * static_cast<double>(n));
        for (auto &v : s.amps_) v = a;
        return s;
    }
    /// Single-qubit state a|0> + b|1>, normalized.
    static StateVector qubit(Amplitude a, Amplitude b) {
        StateVector s(1, {a, b});
        s.normalize();
        return s;
    }
    /// low ⊗ high with low occupying the low-order qubits.
    static StateVector tensor(const StateVector &low, const StateVector &high) {
        StateVector s(low.n_ + high.n_);
        std::size_t dl = low.dimension();
        for (std::size_t h = 0; h < high.dimension(); h++) {
            for (std::size_t l = 0; l < dl; l++) s.amps_[h * dl + l] = high.amps_[h] * low.amps_[l];
        }
        return s;
    }

    std::size_t num_qubits() const noexcept {
        return n_;
    }
    std::size_t dimension() const noexcept {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    const Amplitude &operator[](std::size_t i) const {
        return amps_[i];
    }
    Amplitude &operator[](std::size_t i) {
        return amps_[i];
    }

    void h(std::size_t q) {
        check_qubit(q);
        std::size_t bit = std::size_t{1} << q;
        const double r = 1.0 / std::sqrt(2.0);
        for (std::size_t i = 0; i < amps_.size(); i++) {
            if (i & bit) continue;
            Amplitude a = amps_[i], b = amps_[i | bit];
            amps_[i] = (a + b) * r;
            amps_[i | bit] = (a - b) * r;
        }
    }
    void x(std::size_t q) {
        apply(PhasedPauli{std::uint64_t{1} << check_qubit(q), 0, 0});
    }
    void z(std::size_t q) {
        apply(PhasedPauli{0, std::uint64_t{1} << check_qubit(q), 0});
    }
    void cz(std::size_t a, std::size_t b) {
        check_qubit(a);
        check_qubit(b);
        std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
        for (std::size_t i = 0; i < amps_.size(); i++) {
            if ((i & mask) == mask) amps_[i] = -amps_[i];
        }
    }

    void apply(const PhasedPauli &p) {
        check_mask(p.x | p.z);
        std::vector<Amplitude> out(amps_.size());
        Amplitude ph = i_power(p.phase);
        for (std::size_t b = 0; b < amps_.size(); b++) {
            double sign = (std::popcount(p.z & b) & 1) ? -1.0 : 1.0;
            out[b ^ p.x] = ph * sign * amps_[b];
        }
        amps_ = std::move(out);
    }

    /// Applies p on the branch where qubit `control` is 1.
    void controlled(std::size_t control, const PhasedPauli &p) {
        check_qubit(control);
        std::uint64_t cbit = std::uint64_t{1} << control;
        if ((p.x | p.z) & cbit) fail(ErrorCode::InvalidArgument, "control qubit overlaps the target operator");
        check_mask(p.x | p.z);
        std::vector<Amplitude> out(amps_);
        Amplitude ph = i_power(p.phase);
        for (std::size_t b = 0; b < amps_.size(); b++) {
            if (!(b & cbit)) continue;
            out[b] = 0;
        }
        for (std::size_t b = 0; b < amps_.size(); b++) {
            if (!(b & cbit)) continue;
            double sign = (std::popcount(p.z & b) & 1) ? -1.0 : 1.0;
            out[b ^ p.x] += ph * sign * amps_[b];
        }
        amps_ = std::move(out);
    }

    /// ½(I + (-1)^outcome P) for a Hermitian Pauli P, without renormalization.
    void project(const PhasedPauli &p, int outcome) {
        StateVector other = *this;
        other.apply(p);
        double s = outcome ? -0.5 : 0.5;
        for (std::size_t b = 0; b < amps_.size(); b++) amps_[b] = 0.5 * amps_[b] + s * other.amps_[b];
    }

    /// Probability that measuring P gives eigenvalue -1.
    double minus_probability(const PhasedPauli &p) const {
        StateVector tmp = *this;
        tmp.project(p, 1);
        return tmp.norm2() / norm2();
    }

    double norm2() const {
        double s = 0;
        for (const auto &a : amps_) s += std::norm(a);
        return s;
    }
    void normalize() {
        double nrm = std::sqrt(norm2());
        if (nrm < 1e-300) fail(ErrorCode::ImpossibleOutcome, "state has zero norm");
        for (auto &a : amps_) a /= nrm;
    }

    double probability_one(std::size_t q) const {
        check_qubit(q);
        std::size_t bit = std::size_t{1} << q;
        double p = 0;
        for (std::size_t i = 0; i < amps_.size(); i++) {
            if (i & bit) p += std::norm(amps_[i]);
        }
        return p / norm2();
    }

    /// Projects qubit q onto |bit> and renormalizes.
    void collapse(std::size_t q, int bit) {
        check_qubit(q);
        std::size_t mask = std::size_t{1} << q;
        for (std::size_t i = 0; i < amps_.size(); i++) {
            if (((i & mask) != 0) != (bit != 0)) amps_[i] = 0;
        }
        normalize();
    }

    /// The low `keep` qubits, conditioned on the high qubits reading `high`.
    StateVector slice_low(std::size_t keep, std::uint64_t high) const {
        std::size_t dl = std::size_t{1} << keep;
        std::vector<Amplitude> out(dl);
        for (std::size_t l = 0; l < dl; l++) out[l] = amps_[high * dl + l];
        StateVector s(keep, std::move(out));
        s.normalize();
        return s;
    }

    /// Contracts the low qubits against `low`: result[h] = Σ_l conj(low[l]) amp[h, l].
    StateVector contract_low(const StateVector &low) const {
        std::size_t dl = low.dimension();
        std::size_t dh = amps_.size() / dl;
        std::vector<Amplitude> out(dh, Amplitude{0, 0});
        for (std::size_t h = 0; h < dh; h++) {
            for (std::size_t l = 0; l < dl; l++) out[h] += std::conj(low.amps_[l]) * amps_[h * dl + l];
        }
        return StateVector(n_ - low.n_, std::move(out));
    }
    /// Contracts the high qubits against `high`: result[l] = Σ_h conj(high[h]) amp[h, l].
    StateVector contract_high(const StateVector &high) const {
        std::size_t dh = high.dimension();
        std::size_t dl = amps_.size() / dh;
        std::vector<Amplitude> out(dl, Amplitude{0, 0});
        for (std::size_t h = 0; h < dh; h++) {
            for (std::size_t l = 0; l < dl; l++) out[l] += std::conj(high.amps_[h]) * amps_[h * dl + l];
        }
        return StateVector(n_ - high.n_, std::move(out));
    }

    /// <this|other>.
    Amplitude inner(const StateVector &other) const {
        if (other.n_ != n_) fail(ErrorCode::LengthMismatch, "states have different qubit counts");
        Amplitude s{0, 0};
        for (std::size_t i = 0; i < amps_.size(); i++) s += std::conj(amps_[i]) * other.amps_[i];
        return s;
    }

    double expectation(const PhasedPauli &p) const {
        StateVector tmp = *this;
        tmp.apply(p);
        return inner(tmp).real() / norm2();
    }

   private:
    static std::size_t check_size(std::size_t n) {
        if (n > kMaxStateQubits) {
            fail(ErrorCode::TooManyQubits, std::to_string(n) + " qubits exceed the limit of " +
                                               std::to_string(kMaxStateQubits));
        }
        return n;
    }
    std::size_t check_qubit(std::size_t q) const {
        if (q >= n_) fail(ErrorCode::IndexOutOfRange, "qubit " + std::to_string(q) + " out of range");
        return q;
    }
    void check_mask(std::uint64_t mask) const {
        if (n_ < 64 && (mask >> n_) != 0) fail(ErrorCode::IndexOutOfRange, "operator acts outside the register");
    }

    std::size_t n_ = 0;
    std::vector<Amplitude> amps_{Amplitude{1, 0}};
};

/// |<a|b>|^2 / (<a|a><b|b>).
inline double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(a.inner(b)) / (a.norm2() * b.norm2());
}

/// Number of Schmidt coefficients above tol across qubits [0, split) | [split, n).
inline std::size_t schmidt_rank(const StateVector &s, std::size_t split, double tol = 1e-8) {
    std::size_t dl = std::size_t{1} << split;
    std::size_t dh = s.dimension() / dl;
    Eigen::MatrixXcd m(dl, dh);
    for (std::size_t h = 0; h < dh; h++) {
        for (std::size_t l = 0; l < dl; l++) m(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(h)) = s[h * dl + l];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); i++) {
        if (svd.singularValues()(i) > tol) rank++;
    }
    return rank;
}

/// Splits a product state into (qubits [0, split), qubits [split, n)).
inline std::pair<StateVector, StateVector> factor_product(const StateVector &s, std::size_t split,
                                                          ErrorCode code = ErrorCode::NotProductState) {
    if (split > s.num_qubits()) fail(ErrorCode::IndexOutOfRange, "split outside the register");
    if (schmidt_rank(s, split) > 1) fail(code, "state is entangled across the split");
    std::size_t dl = std::size_t{1} << split;
    std::size_t dh = s.dimension() / dl;
    std::size_t best = 0;
    double best_norm = -1;
    for (std::size_t h = 0; h < dh; h++) {
        double nrm = 0;
        for (std::size_t l = 0; l < dl; l++) nrm += std::norm(s[h * dl + l]);
        if (nrm > best_norm) {
            best_norm = nrm;
            best = h;
        }
    }
    StateVector low = s.slice_low(split, best);
    StateVector high = s.contract_low(low);
    high.normalize();
    return {low, high};
}

/// Measurement outcomes: seeded pseudo-randomness, or a caller-supplied bit string.
class OutcomeSource {
   public:
    explicit OutcomeSource(std::uint64_t seed = 0) : seed_(seed), rng_(seed) {
    }
    explicit OutcomeSource(std::vector<int> forced, std::uint64_t seed = 0)
        : seed_(seed), rng_(seed), forced_(std::move(forced)), is_forced_(true) {
    }

    /// Draws an outcome bit given the probability of 1.
    int next(double p_one) {
        if (is_forced_) {
            if (cursor_ >= forced_.size()) {
                fail(ErrorCode::InvalidArgument, "not enough forced outcomes supplied");
            }
            int bit = forced_[cursor_++] ? 1 : 0;
            double p = bit ? p_one : 1 - p_one;
            if (p < kImpossible) {
                fail(ErrorCode::ImpossibleOutcome, "forced outcome " + std::to_string(bit) + " has probability " +
                                                       std::to_string(p));
            }
            return bit;
        }
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        return dist(rng_) < p_one ? 1 : 0;
    }

    std::uint64_t seed() const noexcept {
        return seed_;
    }
    bool forced() const noexcept {
        return is_forced_;
    }

    static constexpr double kImpossible = 1e-12;

   private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;
    std::vector<int> forced_;
    std::size_t cursor_ = 0;
    bool is_forced_ = false;
};

enum class CorrectionSchedule { interleaved, deferred };
enum class RecoveryMode { measure_and_correct, projector };

struct SimLimits {
    std::size_t max_physical = 20;
    std::size_t max_joint = 24;
    std::size_t opt_in_above = 20;  // joint registers above this need allow_large
    bool allow_large = false;
};

struct ProtocolOptions {
    std::uint64_t seed = 0;
    std::optional<std::vector<int>> forced_outcomes;
    CorrectionSchedule schedule = CorrectionSchedule::interleaved;
    RecoveryMode recovery = RecoveryMode::measure_and_correct;
    SimLimits limits;

    OutcomeSource source() const {
        return forced_outcomes ? OutcomeSource(*forced_outcomes, seed) : OutcomeSource(seed);
    }
};

struct ProtocolTranscript {
    std::vector<int> outcomes;
    std::vector<PauliWord> corrections;  // one per outcome equal to 1
    std::uint64_t seed = 0;
    bool forced = false;
};

inline void check_limits(std::size_t physical, std::size_t joint, const SimLimits &limits) {
    if (physical > limits.max_physical) {
        fail(ErrorCode::TooManyQubits, std::to_string(physical) + " physical qubits exceed the limit of " +
                                           std::to_string(limits.max_physical));
    }
    if (joint > limits.max_joint) {
        fail(ErrorCode::TooManyQubits, std::to_string(joint) + " joint qubits exceed the limit of " +
                                           std::to_string(limits.max_joint));
    }
    if (joint > limits.opt_in_above && !limits.allow_large) {
        fail(ErrorCode::TooManyQubits, std::to_string(joint) + " joint qubits need the large-register opt-in");
    }
}

/// |G> = Π CZ_ij |+>^n; amplitude 2^(-n/2) (-1)^(edges inside the bit pattern).
inline StateVector prepare_graph_state(const Graph &g, const SimLimits &limits = {}) {
    std::size_t n = g.num_vertices();
    if (n > limits.max_physical) {
        fail(ErrorCode::TooManyQubits, std::to_string(n) + " qubits exceed the limit of " +
                                           std::to_string(limits.max_physical));
    }
    std::vector<std::uint64_t> adj(n);
    for (std::size_t i = 0; i < n; i++) adj[i] = g.neighbors(i).low_word();
    StateVector s = StateVector::plus(n);
    for (std::uint64_t b = 0; b < s.dimension(); b++) {
        unsigned twice_edges = 0;
        for (std::uint64_t rest = b; rest; rest &= rest - 1) {
            twice_edges += static_cast<unsigned>(std::popcount(adj[std::countr_zero(rest)] & b));
        }
        if ((twice_edges / 2) & 1) s[b] = -s[b];
    }
    return s;
}

/// Generator S_i as a phased operator (X_i and Z_N(i) act on different qubits).
inline PhasedPauli stabilizer_operator(const Graph &g, std::size_t i) {
    return {std::uint64_t{1} << i, g.neighbors(i).low_word(), 0};
}

/// Information position of each row: the lowest column where that row has a
/// one and every other row has a zero.
inline std::vector<std::size_t> systematic_pivots(const F2Matrix &a) {
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < a.rows(); r++) {
        F2Vector others(a.cols());
        for (std::size_t s = 0; s < a.rows(); s++) {
            if (s != r) others |= a.row(s);
        }
        F2Vector mine = a.row(r);
        F2Vector own = mine ^ (mine & others);
        if (own.is_zero()) {
            fail(ErrorCode::NotSystematic, "row " + std::to_string(r) + " has no private identity column");
        }
        pivots.push_back(own.first_one());
    }
    return pivots;
}

/// Coefficients c_x = <G| Z_{xA} |psi> of an n-qubit state in the code basis.
inline StateVector payload_coefficients(const StateVector &encoded, const StateVector &graph_state, const F2Matrix &a) {
    std::size_t k = a.rows();
    std::vector<std::uint64_t> rows(k);
    for (std::size_t i = 0; i < k; i++) rows[i] = a.row(i).low_word();
    std::vector<Amplitude> c(std::size_t{1} << k, Amplitude{0, 0});
    for (std::uint64_t x = 0; x < c.size(); x++) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < k; i++) {
            if ((x >> i) & 1) mask ^= rows[i];
        }
        Amplitude s{0, 0};
        for (std::uint64_t b = 0; b < encoded.dimension(); b++) {
            Amplitude term = std::conj(graph_state[b]) * encoded[b];
            s += (std::popcount(mask & b) & 1) ? -term : term;
        }
        c[x] = s;
    }
    return StateVector(k, std::move(c));
}

/// Σ_x c_x Z_{xA} |G> built directly from amplitudes.
inline StateVector code_state(const StateVector &graph_state, const F2Matrix &a, const StateVector &payload) {
    std::size_t k = a.rows();
    std::vector<std::uint64_t> rows(k);
    for (std::size_t i = 0; i < k; i++) rows[i] = a.row(i).low_word();
    std::vector<Amplitude> out(graph_state.dimension(), Amplitude{0, 0});
    for (std::uint64_t x = 0; x < payload.dimension(); x++) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < k; i++) {
            if ((x >> i) & 1) mask ^= rows[i];
        }
        for (std::uint64_t b = 0; b < out.size(); b++) {
            Amplitude term = payload[x] * graph_state[b];
            out[b] += (std::popcount(mask & b) & 1) ? -term : term;
        }
    }
    StateVector s(graph_state.num_qubits(), std::move(out));
    s.normalize();
    return s;
}

namespace detail {

inline void check_rows(const Graph &g, const F2Matrix &a) {
    if (a.cols() != g.num_vertices()) {
        fail(ErrorCode::LengthMismatch, "tent-peg matrix has " + std::to_string(a.cols()) +
                                            " columns but the graph has " + std::to_string(g.num_vertices()) +
                                            " vertices");
    }
}

/// One-bit teleportation of `logical` into the register through the rows
/// `a` (pivots `pivots`): CZ from each input qubit to its row support, X
/// measurement of the input, and S_pivot on outcome 1.
inline StateVector teleport_in(const StateVector &physical, const Graph &g, const F2Matrix &a,
                               const std::vector<std::size_t> &pivots, const StateVector &logical,
                               const ProtocolOptions &options, OutcomeSource &source,
                               ProtocolTranscript &transcript) {
    std::size_t n = physical.num_qubits();
    std::size_t k = a.rows();
    if (logical.num_qubits() != k) {
        fail(ErrorCode::LengthMismatch, "logical state has " + std::to_string(logical.num_qubits()) +
                                            " qubits, expected " + std::to_string(k));
    }
    check_limits(n, n + k, options.limits);
    StateVector joint = StateVector::tensor(physical, logical);
    for (std::size_t i = 0; i < k; i++) {
        for (auto j : a.row(i).support()) joint.cz(n + i, j);
    }
    std::vector<int> ys;
    auto correct = [&](std::size_t i) {
        joint.apply(stabilizer_operator(g, pivots[i]));
        transcript.corrections.push_back(stabilizer_product(g, F2Vector::from_support(n, {pivots[i]})));
    };
    for (std::size_t i = 0; i < k; i++) {
        joint.h(n + i);
        int y = source.next(joint.probability_one(n + i));
        joint.collapse(n + i, y);
        ys.push_back(y);
        transcript.outcomes.push_back(y);
        if (y && options.schedule == CorrectionSchedule::interleaved) correct(i);
    }
    if (options.schedule == CorrectionSchedule::deferred) {
        for (std::size_t i = 0; i < k; i++) {
            if (ys[i]) correct(i);
        }
    }
    std::uint64_t high = 0;
    for (std::size_t i = 0; i < k; i++) high |= static_cast<std::uint64_t>(ys[i]) << i;
    return joint.slice_low(n, high);
}

}  // namespace detail

struct EncodeResult {
    StateVector state;
    ProtocolTranscript transcript;
};

/// Encodes k logical qubits into Σ_x a_x Z_{xA} |G>.
inline EncodeResult encode(const Graph &g, const F2Matrix &a, const StateVector &logical,
                           const ProtocolOptions &options = {}) {
    detail::check_rows(g, a);
    auto pivots = systematic_pivots(a);
    check_limits(g.num_vertices(), g.num_vertices() + a.rows(), options.limits);
    OutcomeSource source = options.source();
    EncodeResult out;
    out.transcript.seed = options.seed;
    out.transcript.forced = source.forced();
    out.state = detail::teleport_in(prepare_graph_state(g, options.limits), g, a, pivots, logical, options, source,
                                    out.transcript);
    return out;
}

inline F2Matrix select_rows(const F2Matrix &a, std::size_t begin, std::size_t end) {
    F2Matrix out(0, a.cols());
    for (std::size_t r = begin; r < end; r++) out.append_row(a.row(r));
    return out;
}

/// Encodes logical qubits [0, split) first, then [split, k) into the
/// intermediate code state. The two groups must be unentangled.
inline EncodeResult encode_sequential(const Graph &g, const F2Matrix &a, const StateVector &logical, std::size_t split,
                                      const ProtocolOptions &options = {}) {
    detail::check_rows(g, a);
    std::size_t k = a.rows();
    if (split == 0 || split > k) fail(ErrorCode::InvalidArgument, "split must lie in [1, k]");
    if (split == k) return encode(g, a, logical, options);
    auto pivots = systematic_pivots(a);
    auto [first, second] = factor_product(logical, split);
    OutcomeSource source = options.source();
    EncodeResult out;
    out.transcript.seed = options.seed;
    out.transcript.forced = source.forced();
    std::vector<std::size_t> p1(pivots.begin(), pivots.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<std::size_t> p2(pivots.begin() + static_cast<std::ptrdiff_t>(split), pivots.end());
    StateVector stage = detail::teleport_in(prepare_graph_state(g, options.limits), g, select_rows(a, 0, split), p1,
                                            first, options, source, out.transcript);
    out.state = detail::teleport_in(stage, g, select_rows(a, split, k), p2, second, options, source, out.transcript);
    return out;
}

struct RecoverResult {
    StateVector logical;
    StateVector physical;
    ProtocolTranscript transcript;
    double codespace_weight = 0;
};

inline double codespace_weight(const StateVector &encoded, const StateVector &graph_state, const F2Matrix &a) {
    return payload_coefficients(encoded, graph_state, a).norm2() / encoded.norm2();
}

namespace detail {

inline void require_codespace(double weight) {
    if (weight < 1 - 1e-6) {
        fail(ErrorCode::NotInCodespace, "state has weight " + std::to_string(weight) + " in the code space");
    }
}

/// Projects the physical register of `joint` onto S_i = +1 for every i.
/// In measure mode each outcome -1 is followed by Z_i and the feed-forward
/// returned by `extra(i)` on the appended qubits.
template <typename Extra>
void project_onto_graph(StateVector &joint, const Graph &g, const ProtocolOptions &options, OutcomeSource &source,
                        ProtocolTranscript &transcript, Extra &&extra) {
    std::size_t n = g.num_vertices();
    for (std::size_t i = 0; i < n; i++) {
        auto s = stabilizer_operator(g, i);
        if (options.recovery == RecoveryMode::projector) {
            joint.project(s, 0);
            continue;
        }
        int y = source.next(joint.minus_probability(s));
        transcript.outcomes.push_back(y);
        joint.project(s, y);
        joint.normalize();
        if (y) {
            PhasedPauli fix{0, std::uint64_t{1} << i, 0};
            fix = fix * extra(i);
            joint.apply(fix);
            transcript.corrections.push_back(fix.word(joint.num_qubits()));
        }
    }
    joint.normalize();
}

}  // namespace detail

/// Moves the logical payload onto k fresh recovery qubits and restores |G>.
inline RecoverResult recover(const StateVector &encoded, const Graph &g, const F2Matrix &a,
                             const ProtocolOptions &options = {}) {
    detail::check_rows(g, a);
    std::size_t n = g.num_vertices();
    std::size_t k = a.rows();
    if (encoded.num_qubits() != n) fail(ErrorCode::LengthMismatch, "encoded state size differs from the graph");
    auto pivots = systematic_pivots(a);
    check_limits(n, n + k, options.limits);
    StateVector graph_state = prepare_graph_state(g, options.limits);
    RecoverResult out;
    out.codespace_weight = codespace_weight(encoded, graph_state, a);
    detail::require_codespace(out.codespace_weight);
    OutcomeSource source = options.source();
    out.transcript.seed = options.seed;
    out.transcript.forced = source.forced();
    StateVector joint = StateVector::tensor(encoded, StateVector::plus(k));
    for (std::size_t l = 0; l < k; l++) {
        for (auto j : a.row(l).support()) joint.cz(n + l, j);
    }
    detail::project_onto_graph(joint, g, options, source, out.transcript, [&](std::size_t i) {
        PhasedPauli extra;
        for (std::size_t l = 0; l < k; l++) {
            if (pivots[l] == i) extra.x |= std::uint64_t{1} << (n + l);
        }
        return extra;
    });
    out.logical = joint.contract_low(graph_state);
    out.logical.normalize();
    out.physical = joint.contract_high(out.logical);
    out.physical.normalize();
    return out;
}

struct PartialRecoverResult {
    StateVector qubit;
    StateVector residual;
    ProtocolTranscript transcript;
};

/// Extracts logical qubit `which` (separable from the others) onto one fresh
/// qubit, leaving the remaining logical qubits encoded.
inline PartialRecoverResult partial_recover(const StateVector &encoded, const Graph &g, const F2Matrix &a,
                                            std::size_t which, const ProtocolOptions &options = {}) {
    detail::check_rows(g, a);
    std::size_t n = g.num_vertices();
    std::size_t k = a.rows();
    if (which >= k) fail(ErrorCode::IndexOutOfRange, "logical index outside [0, k)");
    if (encoded.num_qubits() != n) fail(ErrorCode::LengthMismatch, "encoded state size differs from the graph");
    auto pivots = systematic_pivots(a);
    check_limits(n, n + 1, options.limits);
    StateVector graph_state = prepare_graph_state(g, options.limits);
    StateVector payload = payload_coefficients(encoded, graph_state, a);
    detail::require_codespace(payload.norm2() / encoded.norm2());
    // Move qubit `which` to the top to test separability.
    std::vector<Amplitude> moved(payload.dimension());
    for (std::uint64_t x = 0; x < payload.dimension(); x++) {
        std::uint64_t bit = (x >> which) & 1;
        std::uint64_t rest = (x & ((std::uint64_t{1} << which) - 1)) | ((x >> (which + 1)) << which);
        moved[(bit << (k - 1)) | rest] = payload[x];
    }
    if (schmidt_rank(StateVector(k, std::move(moved)), k - 1) > 1) {
        fail(ErrorCode::NotSeparable, "logical qubit " + std::to_string(which) + " is entangled with the others");
    }
    OutcomeSource source = options.source();
    PartialRecoverResult out;
    out.transcript.seed = options.seed;
    out.transcript.forced = source.forced();
    StateVector joint = StateVector::tensor(encoded, StateVector::plus(1));
    for (auto j : a.row(which).support()) joint.cz(n, j);
    auto s = stabilizer_operator(g, pivots[which]);
    int y = source.next(joint.minus_probability(s));
    out.transcript.outcomes.push_back(y);
    joint.project(s, y);
    joint.normalize();
    if (y) {
        PhasedPauli fix{std::uint64_t{1} << n, a.row(which).low_word(), 0};
        joint.apply(fix);
        out.transcript.corrections.push_back(fix.word(n + 1));
    }
    auto [residual, qubit] = factor_product(joint, n, ErrorCode::NotSeparable);
    out.qubit = qubit;
    out.residual = residual;
    return out;
}

/// Phase-exact (Π_{i in T} S_i) · Z_a, where T is the x support of `u`.
inline PhasedPauli controlled_u_operator(const Graph &g, const PauliWord &u, const F2Vector &a_row) {
    PhasedPauli op;
    for (auto i : u.x().support()) op = op * stabilizer_operator(g, i);
    op = op * PhasedPauli{0, a_row.low_word(), 0};
    return op;
}

/// True iff U · Z_a is a graph-state stabilizer, checked by the x-support rule.
inline bool u_times_z_in_stabilizer(const Graph &g, const PauliWord &u, const F2Vector &a_row) {
    PauliWord uz = u * PauliWord::z_string(a_row);
    return in_stabilizer_group(g, uz);
}

struct ControlledRecoverResult {
    StateVector qubit;
    std::size_t interactions = 0;
    ProtocolTranscript transcript;
};

/// Recovers a single logical qubit through one controlled-U, where U Z_a is
/// a stabilizer, instead of CZs along the whole row a.
inline ControlledRecoverResult recover_controlled_u(const StateVector &encoded, const Graph &g, const F2Vector &a_row,
                                                    const PauliWord &u, const ProtocolOptions &options = {}) {
    std::size_t n = g.num_vertices();
    if (a_row.size() != n || u.size() != n || encoded.num_qubits() != n) {
        fail(ErrorCode::LengthMismatch, "row, operator and state must all have the graph's size");
    }
    if (a_row.is_zero()) fail(ErrorCode::InvalidArgument, "tent-peg row must be nonzero");
    if (!u_times_z_in_stabilizer(g, u, a_row)) {
        fail(ErrorCode::PreconditionUZA, "U times Z_a is not a graph-state stabilizer");
    }
    check_limits(n, n + 1, options.limits);
    StateVector graph_state = prepare_graph_state(g, options.limits);
    F2Matrix a(n, {a_row});
    detail::require_codespace(codespace_weight(encoded, graph_state, a));
    auto op = controlled_u_operator(g, u, a_row);
    // S_T Z_a = (-1)^|T ∩ a| Z_a S_T, which the -1 branch must undo.
    bool odd_overlap = (u.x() & a_row).weight() % 2 == 1;
    std::size_t pivot = a_row.first_one();
    OutcomeSource source = options.source();
    ControlledRecoverResult out;
    out.interactions = u.weight();
    out.transcript.seed = options.seed;
    out.transcript.forced = source.forced();
    StateVector joint = StateVector::tensor(encoded, StateVector::plus(1));
    joint.controlled(n, op);
    detail::project_onto_graph(joint, g, options, source, out.transcript, [&](std::size_t i) {
        PhasedPauli extra;
        if (i == pivot) {
            extra.x = std::uint64_t{1} << n;
            if (odd_overlap) extra.z = std::uint64_t{1} << n;
        }
        return extra;
    });
    out.qubit = joint.contract_low(graph_state);
    out.qubit.normalize();
    return out;
}

}  // namespace cwsgraph

#endif
