// Copyright 2026 The stabent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stabent {

using BigInt = boost::multiprecision::cpp_int;

/// Integer vector; entries are interpreted modulo the modulus of whatever
/// subgroup or matrix they are paired with.
using IntVec = std::vector<int64_t>;

/// Non-negative remainder of `a` modulo `d` (d > 0).
inline int64_t mod_floor(int64_t a, int64_t d) {
    int64_t r = a % d;
    return r < 0 ? r + d : r;
}

BigInt big_pow(int64_t base, uint64_t exponent);

/// Dense matrix over Z_d. Entries are always stored reduced into [0, d).
class ModMatrix {
   public:
    ModMatrix(size_t rows, size_t cols, int64_t modulus);
    static ModMatrix from_rows(const std::vector<IntVec> &rows, size_t cols, int64_t modulus);
    static ModMatrix identity(size_t size, int64_t modulus);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    int64_t modulus() const { return modulus_; }

    int64_t operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set(size_t r, size_t c, int64_t value) { data_[r * cols_ + c] = mod_floor(value, modulus_); }
    std::span<const int64_t> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }
    void append_row(std::span<const int64_t> values);

    bool operator==(const ModMatrix &) const = default;

   private:
    size_t rows_;
    size_t cols_;
    int64_t modulus_;
    std::vector<int64_t> data_;
};

/// A subgroup of Z_d^m, stored as the row Hermite normal form of the integer
/// lattice spanned by the lifted generators together with d*Z^m.
///
/// The basis is m x m upper triangular. Every pivot divides d, entries above
/// a pivot lie in [0, pivot), and a row whose pivot equals d is exactly d*e_j.
/// Two subgroups are equal iff their bases are identical.
class Subgroup {
   public:
    static Subgroup from_generators(const ModMatrix &generators);
    static Subgroup from_generators(const std::vector<IntVec> &generators, size_t m, int64_t modulus);
    static Subgroup trivial(size_t m, int64_t modulus);
    static Subgroup full(size_t m, int64_t modulus);

    size_t ambient_rank() const { return m_; }
    int64_t modulus() const { return modulus_; }

    /// Row-major m x m Hermite basis of the lifted lattice.
    const std::vector<int64_t> &basis() const { return basis_; }
    std::span<const int64_t> basis_row(size_t j) const { return {basis_.data() + j * m_, m_}; }
    int64_t pivot(size_t j) const { return basis_[j * m_ + j]; }

    /// Basis rows that are nonzero modulo d, i.e. a generating set of the
    /// subgroup itself. Row j generates a cyclic factor of order d / pivot(j).
    std::vector<IntVec> generators() const;
    ModMatrix generator_matrix() const;

    BigInt order() const;
    /// Order as a plain integer; throws if it does not fit in 63 bits.
    uint64_t order_u64() const;
    bool is_trivial() const;

    bool contains(std::span<const int64_t> v) const;

    /// Every element, reduced into [0, d)^m. Throws when the order exceeds 2^24.
    std::vector<IntVec> elements() const;

    bool operator==(const Subgroup &) const = default;
    auto operator<=>(const Subgroup &) const = default;

   private:
    Subgroup(size_t m, int64_t modulus, std::vector<int64_t> basis);

    size_t m_;
    int64_t modulus_;
    std::vector<int64_t> basis_;
};

/// Intersection S1 ∩ S2 (same ambient rank and modulus).
Subgroup intersect(const Subgroup &a, const Subgroup &b);

/// Sum S1 + S2 (the subgroup generated by both).
Subgroup sum(const Subgroup &a, const Subgroup &b);

/// Image under the coordinate projection keeping `coords` (0-based, in the
/// order given).
Subgroup project(const Subgroup &s, std::span<const size_t> coords);

/// {v in Z_d^m : A v = 0 mod d}.
Subgroup kernel_mod(const ModMatrix &a);

/// {v : v . s = 0 mod d for all s in S} with respect to the dot product.
Subgroup annihilator(const Subgroup &s);

struct SubgroupHash {
    size_t operator()(const Subgroup &s) const noexcept;
};

}  // namespace stabent
