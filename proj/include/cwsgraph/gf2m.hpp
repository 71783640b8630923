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

#ifndef CWSGRAPH_GF2M_HPP
#define CWSGRAPH_GF2M_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cwsgraph/errors.hpp"

namespace cwsgraph {

/// Polynomial over GF(2) packed into an integer: bit i is the coefficient of x^i.
using Gf2Poly = std::uint64_t;

inline unsigned poly_degree(Gf2Poly p) {
    return p == 0 ? 0 : 63u - static_cast<unsigned>(std::countl_zero(p));
}

/// a·b mod p for polynomials of degree < deg(p) <= 32.
inline Gf2Poly poly_mulmod(Gf2Poly a, Gf2Poly b, Gf2Poly p) {
    unsigned m = poly_degree(p);
    Gf2Poly acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> m) & 1) a ^= p;
    }
    return acc;
}

inline Gf2Poly poly_powmod(Gf2Poly a, std::uint64_t e, Gf2Poly p) {
    Gf2Poly r = 1;
    while (e) {
        if (e & 1) r = poly_mulmod(r, a, p);
        a = poly_mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

/// Distinct prime factors by trial division.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// True iff x has multiplicative order 2^m - 1 modulo p, where m = deg(p).
inline bool is_primitive_polynomial(Gf2Poly p) {
    unsigned m = poly_degree(p);
    if (m < 2 || m > 32 || (p & 1) == 0) return false;
    std::uint64_t order = (std::uint64_t{1} << m) - 1;
    Gf2Poly x = 2;
    if (poly_powmod(x, order, p) != 1) return false;
    for (auto q : prime_factors(order)) {
        if (poly_powmod(x, order / q, p) == 1) return false;
    }
    return true;
}

/// Smallest primitive polynomial of degree m, comparing bit patterns as integers.
inline Gf2Poly smallest_primitive_polynomial(unsigned m) {
    if (m < 2 || m > 32) {
        fail(ErrorCode::DegreeOutOfRange, "field degree must lie in [2, 32], got " + std::to_string(m));
    }
    Gf2Poly top = Gf2Poly{1} << m;
    for (Gf2Poly p = top | 1; p < (top << 1); p += 2) {
        if (is_primitive_polynomial(p)) return p;
    }
    fail(ErrorCode::NotFound, "no primitive polynomial of degree " + std::to_string(m));
}

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t mod) {
    __int128 t = 0, new_t = 1, r = static_cast<__int128>(mod), new_r = static_cast<__int128>(a % mod);
    while (new_r != 0) {
        __int128 q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) {
        fail(ErrorCode::InvalidArgument, "value is not invertible modulo " + std::to_string(mod));
    }
    if (t < 0) t += mod;
    return static_cast<std::uint64_t>(t);
}

class FieldElement;

/// GF(2^m) defined by the smallest primitive polynomial of degree m. The
/// polynomial x (value 2) generates the multiplicative group. Copies share
/// the immutable tables.
class FieldGF2m {
   public:
    static constexpr unsigned kTableLimit = 20;

    explicit FieldGF2m(unsigned m) : state_(shared_state(m)) {
    }

    unsigned degree() const noexcept {
        return state_->m;
    }
    Gf2Poly modulus() const noexcept {
        return state_->modulus;
    }
    std::uint64_t size() const noexcept {
        return std::uint64_t{1} << state_->m;
    }
    /// Order of the multiplicative group, 2^m - 1.
    std::uint64_t group_order() const noexcept {
        return state_->order;
    }
    std::uint64_t generator() const noexcept {
        return 2;
    }
    bool has_tables() const noexcept {
        return !state_->log.empty();
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        return a ^ b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        if (has_tables()) {
            std::uint64_t s = std::uint64_t{state_->log[a]} + state_->log[b];
            if (s >= state_->order) s -= state_->order;
            return state_->antilog[s];
        }
        return poly_mulmod(a, b, state_->modulus);
    }
    /// g^e for the table generator g.
    std::uint64_t exp(std::uint64_t e) const {
        e %= state_->order;
        if (has_tables()) return state_->antilog[e];
        return poly_powmod(2, e, state_->modulus);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        if (has_tables()) {
            unsigned __int128 s = static_cast<unsigned __int128>(state_->log[a]) * (e % state_->order);
            return state_->antilog[static_cast<std::uint64_t>(s % state_->order)];
        }
        return poly_powmod(a, e % state_->order, state_->modulus);
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) fail(ErrorCode::InvalidArgument, "zero has no inverse");
        return pow(a, state_->order - 1);
    }

    /// Discrete logarithm to the table generator.
    std::uint64_t dlog(std::uint64_t a) const {
        if (a == 0) fail(ErrorCode::LogOfZero, "logarithm of zero");
        check_value(a);
        if (has_tables()) return state_->log[a];
        return pohlig_hellman(a);
    }

    std::uint64_t element_order(std::uint64_t a) const {
        if (a == 0) fail(ErrorCode::InvalidArgument, "zero has no multiplicative order");
        std::uint64_t ord = state_->order;
        for (auto q : state_->factors) {
            while (ord % q == 0 && pow(a, ord / q) == 1) ord /= q;
        }
        return ord;
    }
    bool is_primitive_element(std::uint64_t a) const {
        return a != 0 && element_order(a) == state_->order;
    }

    /// Logarithm of h to a primitive base.
    std::uint64_t log_base(std::uint64_t base, std::uint64_t h) const {
        std::uint64_t t = dlog(base);
        if (std::gcd(t, state_->order) != 1) {
            fail(ErrorCode::InvalidArgument, "logarithm base is not primitive");
        }
        unsigned __int128 v = static_cast<unsigned __int128>(dlog(h)) * mod_inverse(t, state_->order);
        return static_cast<std::uint64_t>(v % state_->order);
    }

    /// Smallest d with a^(2^d) = a.
    unsigned subfield_degree(std::uint64_t a) const {
        std::uint64_t c = a;
        for (unsigned d = 1; d <= state_->m; d++) {
            c = mul(c, c);
            if (c == a) return d;
        }
        return state_->m;
    }

    void check_value(std::uint64_t a) const {
        if (a >= size()) {
            fail(ErrorCode::InvalidArgument, "value outside GF(2^" + std::to_string(state_->m) + ")");
        }
    }

    FieldElement element(std::uint64_t value) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement primitive() const;

    bool operator==(const FieldGF2m &other) const noexcept {
        return state_->m == other.state_->m && state_->modulus == other.state_->modulus;
    }

   private:
    struct State {
        unsigned m = 0;
        Gf2Poly modulus = 0;
        std::uint64_t order = 0;
        std::vector<std::uint64_t> factors;
        std::vector<std::uint32_t> log;
        std::vector<std::uint32_t> antilog;
    };

    static std::shared_ptr<const State> shared_state(unsigned m) {
        static std::mutex mutex;
        static std::map<unsigned, std::shared_ptr<const State>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        auto s = std::make_shared<State>();
        s->m = m;
        s->modulus = smallest_primitive_polynomial(m);
        s->order = (std::uint64_t{1} << m) - 1;
        s->factors = prime_factors(s->order);
        if (m <= kTableLimit) {
            s->log.assign(std::size_t{1} << m, 0);
            s->antilog.assign(s->order, 0);
            std::uint64_t v = 1;
            for (std::uint64_t i = 0; i < s->order; i++) {
                s->antilog[i] = static_cast<std::uint32_t>(v);
                s->log[v] = static_cast<std::uint32_t>(i);
                v <<= 1;
                if ((v >> m) & 1) v ^= s->modulus;
            }
        }
        cache.emplace(m, s);
        return s;
    }

    std::uint64_t bsgs(std::uint64_t base, std::uint64_t target, std::uint64_t q) const {
        std::uint64_t steps = 1;
        while (steps * steps < q) steps++;
        std::unordered_map<std::uint64_t, std::uint64_t> baby;
        baby.reserve(steps * 2);
        std::uint64_t cur = 1;
        for (std::uint64_t j = 0; j < steps; j++) {
            baby.emplace(cur, j);
            cur = mul(cur, base);
        }
        std::uint64_t giant = inv(pow(base, steps));
        std::uint64_t gamma = target;
        for (std::uint64_t i = 0; i <= steps; i++) {
            auto it = baby.find(gamma);
            if (it != baby.end()) return (i * steps + it->second) % q;
            gamma = mul(gamma, giant);
        }
        fail(ErrorCode::NotFound, "discrete logarithm search failed");
    }

    std::uint64_t pohlig_hellman(std::uint64_t h) const {
        std::uint64_t n = state_->order;
        unsigned __int128 result = 0;
        unsigned __int128 modulus = 1;
        for (auto q : state_->factors) {
            std::uint64_t qe = 1;
            unsigned e = 0;
            while (n % (qe * q) == 0) {
                qe *= q;
                e++;
            }
            std::uint64_t gamma = pow(2, n / q);
            std::uint64_t x = 0;
            std::uint64_t qi = 1;
            for (unsigned i = 0; i < e; i++) {
                std::uint64_t hk = mul(h, inv(pow(2, x)));
                hk = pow(hk, n / (qi * q));
                x += bsgs(gamma, hk, q) * qi;
                qi *= q;
            }
            // Chinese remaindering of result mod `modulus` with x mod qe.
            std::uint64_t mod64 = static_cast<std::uint64_t>(modulus);
            std::uint64_t diff = static_cast<std::uint64_t>((x + qe - static_cast<std::uint64_t>(result % qe)) % qe);
            std::uint64_t k = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(diff) * mod_inverse(mod64 % qe, qe) % qe);
            result += modulus * k;
            modulus *= qe;
        }
        return static_cast<std::uint64_t>(result % n);
    }

    std::shared_ptr<const State> state_;
};

inline FieldGF2m make_field(unsigned m) {
    if (m < 2 || m > 32) {
        fail(ErrorCode::DegreeOutOfRange, "field degree must lie in [2, 32], got " + std::to_string(m));
    }
    return FieldGF2m(m);
}

/// Value-typed element of a FieldGF2m.
class FieldElement {
   public:
    FieldElement(FieldGF2m field, std::uint64_t value) : field_(std::move(field)), value_(value) {
        field_.check_value(value_);
    }

    const FieldGF2m &field() const noexcept {
        return field_;
    }
    std::uint64_t value() const noexcept {
        return value_;
    }
    bool is_zero() const noexcept {
        return value_ == 0;
    }

    FieldElement operator+(const FieldElement &o) const {
        check_same(o);
        return {field_, value_ ^ o.value_};
    }
    FieldElement operator*(const FieldElement &o) const {
        check_same(o);
        return {field_, field_.mul(value_, o.value_)};
    }
    FieldElement pow(std::uint64_t e) const {
        return {field_, field_.pow(value_, e)};
    }
    /// Power with a signed exponent; negative exponents invert.
    FieldElement pow_signed(std::int64_t e) const {
        if (e >= 0) return pow(static_cast<std::uint64_t>(e));
        return inverse().pow(static_cast<std::uint64_t>(-e));
    }
    FieldElement inverse() const {
        return {field_, field_.inv(value_)};
    }
    FieldElement square() const {
        return {field_, field_.mul(value_, value_)};
    }
    std::uint64_t dlog() const {
        return field_.dlog(value_);
    }
    std::uint64_t order() const {
        return field_.element_order(value_);
    }
    bool is_primitive() const {
        return field_.is_primitive_element(value_);
    }

    bool operator==(const FieldElement &o) const {
        return field_ == o.field_ && value_ == o.value_;
    }
    bool operator<(const FieldElement &o) const {
        return value_ < o.value_;
    }

   private:
    void check_same(const FieldElement &o) const {
        if (!(field_ == o.field_)) fail(ErrorCode::InvalidArgument, "elements belong to different fields");
    }

    FieldGF2m field_;
    std::uint64_t value_;
};

inline FieldElement FieldGF2m::element(std::uint64_t value) const {
    return FieldElement(*this, value);
}
inline FieldElement FieldGF2m::zero() const {
    return FieldElement(*this, 0);
}
inline FieldElement FieldGF2m::one() const {
    return FieldElement(*this, 1);
}
inline FieldElement FieldGF2m::primitive() const {
    return FieldElement(*this, generator());
}

inline std::uint64_t dlog(const FieldElement &e) {
    return e.dlog();
}

/// Minimal polynomial over GF(2): the product of (x + c) over the Frobenius
/// conjugates c of e.
inline Gf2Poly minimal_polynomial(const FieldElement &e) {
    const auto &f = e.field();
    std::vector<std::uint64_t> coeffs{1};
    std::uint64_t c = e.value();
    do {
        std::vector<std::uint64_t> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); i++) {
            next[i + 1] ^= coeffs[i];
            next[i] ^= f.mul(coeffs[i], c);
        }
        coeffs = std::move(next);
        c = f.mul(c, c);
    } while (c != e.value());
    Gf2Poly out = 0;
    for (std::size_t i = 0; i < coeffs.size(); i++) {
        if (coeffs[i] > 1) fail(ErrorCode::InvalidArgument, "minimal polynomial left GF(2)");
        out |= Gf2Poly{coeffs[i]} << i;
    }
    return out;
}

/// Evaluates a GF(2) polynomial at a field element.
inline FieldElement evaluate(Gf2Poly p, const FieldElement &at) {
    std::uint64_t acc = 0;
    for (int i = static_cast<int>(poly_degree(p)); i >= 0; i--) {
        acc = at.field().mul(acc, at.value()) ^ ((p >> i) & 1);
    }
    return at.field().element(acc);
}

using FieldPair = std::pair<FieldElement, FieldElement>;

/// Frobenius orbit {(e^(2^t), f^(2^t))} in order of increasing t.
inline std::vector<FieldPair> conjugacy_class(const FieldPair &pair) {
    if (!(pair.first.field() == pair.second.field())) {
        fail(ErrorCode::InvalidArgument, "pair elements belong to different fields");
    }
    std::vector<FieldPair> orbit{pair};
    FieldPair cur{pair.first.square(), pair.second.square()};
    while (!(cur.first == pair.first && cur.second == pair.second)) {
        orbit.push_back(cur);
        cur = {cur.first.square(), cur.second.square()};
    }
    return orbit;
}

/// First primitive α = g^t (t increasing, gcd(t, 2^m - 1) = 1) whose
/// logarithm of 1 + α to base α is not 2 mod 3.
inline FieldElement find_primitive_mod3(const FieldGF2m &field) {
    unsigned m = field.degree();
    if (m % 2 != 0 || m < 4) {
        fail(ErrorCode::DegreeOutOfRange, "field degree must be even and at least 4, got " + std::to_string(m));
    }
    std::uint64_t n = field.group_order();
    for (std::uint64_t t = 1; t < n; t++) {
        if (std::gcd(t, n) != 1) continue;
        std::uint64_t alpha = field.exp(t);
        std::uint64_t one_plus = alpha ^ 1;
        unsigned __int128 l = static_cast<unsigned __int128>(field.dlog(one_plus)) * mod_inverse(t, n);
        if (static_cast<std::uint64_t>(l % n) % 3 != 2) return field.element(alpha);
    }
    fail(ErrorCode::NotFound, "no primitive element satisfies the mod-3 logarithm condition");
}

}  // namespace cwsgraph

#endif
