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

#ifndef CWSGRAPH_F2CORE_HPP
#define CWSGRAPH_F2CORE_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwsgraph/errors.hpp"

namespace cwsgraph {

/// Bit-packed vector over GF(2). Bits at or beyond size() are always zero.
class F2Vector {
   public:
    static constexpr std::size_t kWordBits = 64;

    F2Vector() = default;
    explicit F2Vector(std::size_t len) : len_(len), words_(word_count(len), 0) {
    }

    static std::size_t word_count(std::size_t len) {
        return (len + kWordBits - 1) / kWordBits;
    }

    /// Parses an ASCII 0/1 string; the leftmost character is coordinate 0.
    static F2Vector from_string(std::string_view bits) {
        F2Vector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); i++) {
            if (bits[i] == '1') {
                v.set(i);
            } else if (bits[i] != '0') {
                fail(ErrorCode::ParseError, "bit string may only contain '0' and '1': " + std::string(bits));
            }
        }
        return v;
    }

    static F2Vector from_support(std::size_t len, std::span<const std::size_t> support) {
        F2Vector v(len);
        for (auto i : support) {
            v.at_check(i);
            v.set(i);
        }
        return v;
    }

    static F2Vector from_support(std::size_t len, std::initializer_list<std::size_t> support) {
        return from_support(len, std::span<const std::size_t>(support.begin(), support.size()));
    }

    /// Low `len` bits of an integer mask.
    static F2Vector from_mask(std::size_t len, std::uint64_t mask) {
        F2Vector v(len);
        if (len == 0) {
            return v;
        }
        if (len < kWordBits) {
            mask &= (std::uint64_t{1} << len) - 1;
        }
        v.words_[0] = mask;
        return v;
    }

    std::size_t size() const noexcept {
        return len_;
    }

    bool get(std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
    }
    bool operator[](std::size_t i) const {
        return get(i);
    }
    void set(std::size_t i, bool value = true) {
        std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= bit;
        } else {
            words_[i / kWordBits] &= ~bit;
        }
    }
    void flip(std::size_t i) {
        words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
    }

    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (auto word : words_) {
            w += static_cast<std::size_t>(std::popcount(word));
        }
        return w;
    }
    bool is_zero() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < words_.size(); k++) {
            std::uint64_t w = words_[k];
            while (w) {
                out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    /// Index of the lowest set bit, or size() when zero.
    std::size_t first_one() const noexcept {
        for (std::size_t k = 0; k < words_.size(); k++) {
            if (words_[k]) {
                return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
            }
        }
        return len_;
    }

    /// Low 64 bits as an integer (bit i = coordinate i).
    std::uint64_t low_word() const noexcept {
        return words_.empty() ? 0 : words_[0];
    }

    F2Vector &operator^=(const F2Vector &other) {
        check_same(other);
        for (std::size_t k = 0; k < words_.size(); k++) {
            words_[k] ^= other.words_[k];
        }
        return *this;
    }
    F2Vector &operator&=(const F2Vector &other) {
        check_same(other);
        for (std::size_t k = 0; k < words_.size(); k++) {
            words_[k] &= other.words_[k];
        }
        return *this;
    }
    F2Vector &operator|=(const F2Vector &other) {
        check_same(other);
        for (std::size_t k = 0; k < words_.size(); k++) {
            words_[k] |= other.words_[k];
        }
        return *this;
    }
    friend F2Vector operator^(F2Vector a, const F2Vector &b) {
        return a ^= b;
    }
    friend F2Vector operator&(F2Vector a, const F2Vector &b) {
        return a &= b;
    }
    friend F2Vector operator|(F2Vector a, const F2Vector &b) {
        return a |= b;
    }

    /// Parity of the coordinatewise product.
    bool dot(const F2Vector &other) const {
        check_same(other);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < words_.size(); k++) {
            acc ^= words_[k] & other.words_[k];
        }
        return std::popcount(acc) & 1;
    }

    /// Concatenation: this occupies coordinates [0, size()), other follows.
    F2Vector concat(const F2Vector &other) const {
        F2Vector out(len_ + other.len_);
        for (std::size_t i = 0; i < len_; i++) {
            if (get(i)) out.set(i);
        }
        for (std::size_t i = 0; i < other.len_; i++) {
            if (other.get(i)) out.set(len_ + i);
        }
        return out;
    }

    /// Cyclic rotation: output[(i + shift) mod n] = input[i].
    F2Vector rotated(std::size_t shift) const {
        F2Vector out(len_);
        if (len_ == 0) {
            return out;
        }
        for (auto i : support()) {
            out.set((i + shift) % len_);
        }
        return out;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; i++) {
            if (get(i)) s[i] = '1';
        }
        return s;
    }

    std::span<const std::uint64_t> words() const noexcept {
        return words_;
    }
    std::span<std::uint64_t> words() noexcept {
        return words_;
    }

    bool operator==(const F2Vector &other) const = default;
    bool operator<(const F2Vector &other) const {
        if (len_ != other.len_) return len_ < other.len_;
        return std::lexicographical_compare(
            words_.rbegin(), words_.rend(), other.words_.rbegin(), other.words_.rend());
    }

    std::size_t hash() const noexcept {
        std::size_t h = std::hash<std::size_t>{}(len_);
        for (auto w : words_) {
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

   private:
    void check_same(const F2Vector &other) const {
        if (other.len_ != len_) {
            fail(ErrorCode::LengthMismatch,
                 "vector lengths differ: " + std::to_string(len_) + " vs " + std::to_string(other.len_));
        }
    }
    void at_check(std::size_t i) const {
        if (i >= len_) {
            fail(ErrorCode::IndexOutOfRange,
                 "coordinate " + std::to_string(i) + " outside length " + std::to_string(len_));
        }
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::ostream &operator<<(std::ostream &out, const F2Vector &v) {
    return out << v.to_string();
}

struct F2VectorHash {
    std::size_t operator()(const F2Vector &v) const noexcept {
        return v.hash();
    }
};

/// Dense matrix over GF(2) stored as packed rows.
class F2Matrix {
   public:
    F2Matrix() = default;
    F2Matrix(std::size_t nrows, std::size_t ncols) : ncols_(ncols), rows_(nrows, F2Vector(ncols)) {
    }
    F2Matrix(std::size_t ncols, std::vector<F2Vector> rows) : ncols_(ncols), rows_(std::move(rows)) {
        for (const auto &r : rows_) {
            if (r.size() != ncols_) {
                fail(ErrorCode::LengthMismatch, "matrix row length differs from column count");
            }
        }
    }

    static F2Matrix identity(std::size_t n) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; i++) {
            m.rows_[i].set(i);
        }
        return m;
    }

    /// Rows given as 0/1 strings of equal length.
    static F2Matrix from_strings(std::span<const std::string> rows, std::size_t ncols) {
        std::vector<F2Vector> out;
        out.reserve(rows.size());
        for (const auto &r : rows) {
            out.push_back(F2Vector::from_string(r));
        }
        return F2Matrix(ncols, std::move(out));
    }
    static F2Matrix from_strings(std::initializer_list<std::string_view> rows) {
        std::vector<F2Vector> out;
        std::size_t ncols = rows.size() ? rows.begin()->size() : 0;
        for (auto r : rows) {
            out.push_back(F2Vector::from_string(r));
        }
        return F2Matrix(ncols, std::move(out));
    }

    std::size_t rows() const noexcept {
        return rows_.size();
    }
    std::size_t cols() const noexcept {
        return ncols_;
    }
    const F2Vector &row(std::size_t i) const {
        return rows_[i];
    }
    F2Vector &row(std::size_t i) {
        return rows_[i];
    }
    const std::vector<F2Vector> &row_list() const noexcept {
        return rows_;
    }
    void append_row(F2Vector r) {
        if (r.size() != ncols_) {
            fail(ErrorCode::LengthMismatch, "appended row has wrong length");
        }
        rows_.push_back(std::move(r));
    }

    bool get(std::size_t r, std::size_t c) const {
        return rows_[r].get(c);
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        rows_[r].set(c, v);
    }

    F2Vector column(std::size_t c) const {
        F2Vector out(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); r++) {
            if (rows_[r].get(c)) out.set(r);
        }
        return out;
    }

    F2Matrix transpose() const {
        F2Matrix t(ncols_, rows_.size());
        for (std::size_t r = 0; r < rows_.size(); r++) {
            for (auto c : rows_[r].support()) {
                t.rows_[c].set(r);
            }
        }
        return t;
    }

    /// M·vᵀ: one output bit per row.
    F2Vector multiply(const F2Vector &v) const {
        if (v.size() != ncols_) {
            fail(ErrorCode::LengthMismatch, "vector length differs from column count");
        }
        F2Vector out(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); r++) {
            if (rows_[r].dot(v)) out.set(r);
        }
        return out;
    }

    /// x·M for a row selector x of length rows().
    F2Vector combine_rows(const F2Vector &x) const {
        if (x.size() != rows_.size()) {
            fail(ErrorCode::LengthMismatch, "selector length differs from row count");
        }
        F2Vector out(ncols_);
        for (auto r : x.support()) {
            out ^= rows_[r];
        }
        return out;
    }

    friend F2Matrix operator*(const F2Matrix &a, const F2Matrix &b) {
        if (a.ncols_ != b.rows()) {
            fail(ErrorCode::LengthMismatch, "matrix product dimensions differ");
        }
        F2Matrix out(a.rows(), b.ncols_);
        for (std::size_t r = 0; r < a.rows(); r++) {
            out.rows_[r] = b.combine_rows(a.rows_[r]);
        }
        return out;
    }

    bool is_zero() const {
        return std::all_of(rows_.begin(), rows_.end(), [](const F2Vector &r) { return r.is_zero(); });
    }

    std::string to_string() const {
        std::string s;
        for (const auto &r : rows_) {
            s += r.to_string();
            s += '\n';
        }
        return s;
    }

    bool operator==(const F2Matrix &other) const = default;

   private:
    std::size_t ncols_ = 0;
    std::vector<F2Vector> rows_;
};

inline std::ostream &operator<<(std::ostream &out, const F2Matrix &m) {
    return out << m.to_string();
}

struct RowReduction {
    F2Matrix reduced;                // nonzero rows of the reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each reduced row, increasing
};

/// Reduced row echelon form. Columns are scanned left to right, so each
/// pivot sits at the lowest-index column not spanned by earlier pivots.
inline RowReduction rref(F2Matrix m) {
    std::vector<F2Vector> rows(m.row_list().begin(), m.row_list().end());
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); c++) {
        std::size_t pick = rank;
        while (pick < rows.size() && !rows[pick].get(c)) pick++;
        if (pick == rows.size()) continue;
        std::swap(rows[rank], rows[pick]);
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r].get(c)) {
                rows[r] ^= rows[rank];
            }
        }
        pivots.push_back(c);
        rank++;
    }
    rows.resize(rank);
    return {F2Matrix(m.cols(), std::move(rows)), std::move(pivots)};
}

inline std::size_t rank(const F2Matrix &m) {
    return rref(m).pivots.size();
}

/// Basis of {v : M·vᵀ = 0}, one vector per free column in increasing order.
inline F2Matrix nullspace(const F2Matrix &m) {
    auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;
    F2Matrix basis(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) continue;
        F2Vector v(m.cols());
        v.set(f);
        for (std::size_t r = 0; r < red.pivots.size(); r++) {
            if (red.reduced.get(r, f)) v.set(red.pivots[r]);
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

/// Reorders columns: output column c is input column perm[c].
inline F2Matrix permute_columns(const F2Matrix &m, std::span<const std::size_t> perm) {
    if (perm.size() != m.cols()) {
        fail(ErrorCode::LengthMismatch, "permutation length differs from column count");
    }
    F2Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < perm.size(); c++) {
            if (m.get(r, perm[c])) out.set(r, c);
        }
    }
    return out;
}

inline std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm) {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t c = 0; c < perm.size(); c++) inv[perm[c]] = c;
    return inv;
}

struct SystematicForm {
    F2Matrix matrix;                      // [I | B] in permuted coordinates
    std::vector<std::size_t> permutation; // matrix column c is original column permutation[c]
    F2Matrix reduced;                     // the same rows in original coordinates (rref)
    std::vector<std::size_t> pivots;      // information set in original coordinates
};

/// Row-reduces a full-rank generator and moves pivot columns to the front.
inline SystematicForm systematic_form(const F2Matrix &g) {
    auto red = rref(g);
    if (red.pivots.size() != g.rows()) {
        fail(ErrorCode::RankDeficient, "generator rows are linearly dependent (rank " +
                                           std::to_string(red.pivots.size()) + " < " +
                                           std::to_string(g.rows()) + ")");
    }
    std::vector<std::size_t> perm(red.pivots);
    std::vector<bool> is_pivot(g.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < g.cols(); c++) {
        if (!is_pivot[c]) perm.push_back(c);
    }
    auto permuted = permute_columns(red.reduced, perm);
    return {std::move(permuted), std::move(perm), std::move(red.reduced), std::move(red.pivots)};
}

/// Pauli operator in symplectic form [x|z]; phases are not represented.
class PauliWord {
   public:
    PauliWord() = default;
    explicit PauliWord(std::size_t n) : x_(n), z_(n) {
    }
    PauliWord(F2Vector x, F2Vector z) : x_(std::move(x)), z_(std::move(z)) {
        if (x_.size() != z_.size()) {
            fail(ErrorCode::LengthMismatch, "x and z parts differ in length");
        }
    }

    /// Letters I, X, Y, Z; leftmost letter is qubit 0.
    static PauliWord from_letters(std::string_view letters) {
        PauliWord p(letters.size());
        for (std::size_t i = 0; i < letters.size(); i++) {
            p.set_letter(i, letters[i]);
        }
        return p;
    }
    static PauliWord z_string(const F2Vector &support) {
        return PauliWord(F2Vector(support.size()), support);
    }
    static PauliWord x_string(const F2Vector &support) {
        return PauliWord(support, F2Vector(support.size()));
    }

    std::size_t size() const noexcept {
        return x_.size();
    }
    const F2Vector &x() const noexcept {
        return x_;
    }
    const F2Vector &z() const noexcept {
        return z_;
    }
    F2Vector &x() noexcept {
        return x_;
    }
    F2Vector &z() noexcept {
        return z_;
    }

    char letter(std::size_t i) const {
        static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
        return kLetters[(x_.get(i) ? 1 : 0) | (z_.get(i) ? 2 : 0)];
    }
    void set_letter(std::size_t i, char c) {
        switch (c) {
            case 'I': case '_': x_.set(i, false); z_.set(i, false); break;
            case 'X': x_.set(i, true); z_.set(i, false); break;
            case 'Y': x_.set(i, true); z_.set(i, true); break;
            case 'Z': x_.set(i, false); z_.set(i, true); break;
            default: fail(ErrorCode::ParseError, std::string("unknown Pauli letter '") + c + "'");
        }
    }
    std::string to_letters() const {
        std::string s(size(), 'I');
        for (std::size_t i = 0; i < size(); i++) s[i] = letter(i);
        return s;
    }

    F2Vector support() const {
        return x_ | z_;
    }
    std::size_t weight() const {
        std::size_t w = 0;
        auto xs = x_.words();
        auto zs = z_.words();
        for (std::size_t k = 0; k < xs.size(); k++) {
            w += static_cast<std::size_t>(std::popcount(xs[k] | zs[k]));
        }
        return w;
    }
    bool is_identity() const {
        return x_.is_zero() && z_.is_zero();
    }

    /// Symplectic form x·z' + z·x'; zero iff the operators commute.
    bool symplectic_product(const PauliWord &other) const {
        return x_.dot(other.z_) ^ z_.dot(other.x_);
    }
    bool commutes_with(const PauliWord &other) const {
        return !symplectic_product(other);
    }

    PauliWord &operator*=(const PauliWord &other) {
        x_ ^= other.x_;
        z_ ^= other.z_;
        return *this;
    }
    friend PauliWord operator*(PauliWord a, const PauliWord &b) {
        return a *= b;
    }

    bool operator==(const PauliWord &other) const = default;
    bool operator<(const PauliWord &other) const {
        if (x_ == other.x_) return z_ < other.z_;
        return x_ < other.x_;
    }

   private:
    F2Vector x_;
    F2Vector z_;
};

inline std::size_t symplectic_weight(const PauliWord &p) {
    return p.weight();
}

inline std::ostream &operator<<(std::ostream &out, const PauliWord &p) {
    return out << p.to_letters();
}

}  // namespace cwsgraph

#endif
