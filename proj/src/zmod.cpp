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

#include "stabent/zmod.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace stabent {

namespace {

struct ExtGcd {
    int64_t g;
    int64_t a;
    int64_t b;
};

// a*x + b*y = g with g = gcd(x, y) >= 0.
ExtGcd ext_gcd(int64_t x, int64_t y) {
    int64_t old_r = x, r = y;
    int64_t old_s = 1, s = 0;
    int64_t old_t = 0, t = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        return {-old_r, -old_s, -old_t};
    }
    return {old_r, old_s, old_t};
}

void check_modulus(int64_t d) {
    if (d < 2) {
        throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(d));
    }
}

// Row Hermite normal form of the lattice spanned by `rows` and d*Z^m.
//
// Column j is eliminated against an accumulator that starts as d*e_j. The
// rows d*e_k for k > j are never touched before their own column, so any
// working row may be reduced modulo d in columns > j without changing the
// lattice.
std::vector<int64_t> hermite_lattice_basis(std::vector<IntVec> rows, size_t m, int64_t d) {
    for (auto &r : rows) {
        for (auto &x : r) {
            x = mod_floor(x, d);
        }
    }
    std::vector<int64_t> basis(m * m, 0);
    IntVec piv(m);
    for (size_t j = 0; j < m; j++) {
        std::fill(piv.begin(), piv.end(), 0);
        piv[j] = d;
        for (auto &r : rows) {
            if (r[j] == 0) {
                continue;
            }
            auto [g, a, b] = ext_gcd(piv[j], r[j]);
            int64_t s = piv[j] / g;
            int64_t t = r[j] / g;
            for (size_t k = j; k < m; k++) {
                int64_t np = a * piv[k] + b * r[k];
                int64_t nr = s * r[k] - t * piv[k];
                piv[k] = k == j ? np : mod_floor(np, d);
                r[k] = k == j ? nr : mod_floor(nr, d);
            }
        }
        std::erase_if(rows, [&](const IntVec &r) {
            for (size_t k = j + 1; k < m; k++) {
                if (r[k] != 0) {
                    return false;
                }
            }
            return true;
        });
        std::copy(piv.begin(), piv.end(), basis.begin() + static_cast<ptrdiff_t>(j * m));
    }

    // Reduce entries above each pivot into [0, pivot).
    for (size_t j = 0; j < m; j++) {
        int64_t p = basis[j * m + j];
        for (size_t i = 0; i < j; i++) {
            int64_t x = basis[i * m + j];
            int64_t q = (x - mod_floor(x, p)) / p;
            if (q == 0) {
                continue;
            }
            for (size_t k = j; k < m; k++) {
                basis[i * m + k] -= q * basis[j * m + k];
            }
        }
    }
    return basis;
}

void check_same_ambient(const Subgroup &a, const Subgroup &b) {
    if (a.ambient_rank() != b.ambient_rank() || a.modulus() != b.modulus()) {
        throw std::invalid_argument("subgroups live in different ambient groups");
    }
}

}  // namespace

BigInt big_pow(int64_t base, uint64_t exponent) {
    BigInt result = 1;
    BigInt b = base;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= b;
        }
        b *= b;
        exponent >>= 1;
    }
    return result;
}

ModMatrix::ModMatrix(size_t rows, size_t cols, int64_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
    check_modulus(modulus);
}

ModMatrix ModMatrix::from_rows(const std::vector<IntVec> &rows, size_t cols, int64_t modulus) {
    ModMatrix result(0, cols, modulus);
    for (const auto &r : rows) {
        result.append_row(r);
    }
    return result;
}

ModMatrix ModMatrix::identity(size_t size, int64_t modulus) {
    ModMatrix result(size, size, modulus);
    for (size_t i = 0; i < size; i++) {
        result.set(i, i, 1);
    }
    return result;
}

void ModMatrix::append_row(std::span<const int64_t> values) {
    if (values.size() != cols_) {
        throw std::invalid_argument(
            "row has length " + std::to_string(values.size()) + ", expected " + std::to_string(cols_));
    }
    for (int64_t v : values) {
        data_.push_back(mod_floor(v, modulus_));
    }
    rows_++;
}

Subgroup::Subgroup(size_t m, int64_t modulus, std::vector<int64_t> basis)
    : m_(m), modulus_(modulus), basis_(std::move(basis)) {
}

Subgroup Subgroup::from_generators(const ModMatrix &generators) {
    std::vector<IntVec> rows;
    rows.reserve(generators.rows());
    for (size_t r = 0; r < generators.rows(); r++) {
        auto row = generators.row(r);
        rows.emplace_back(row.begin(), row.end());
    }
    return Subgroup(
        generators.cols(), generators.modulus(),
        hermite_lattice_basis(std::move(rows), generators.cols(), generators.modulus()));
}

Subgroup Subgroup::from_generators(const std::vector<IntVec> &generators, size_t m, int64_t modulus) {
    return from_generators(ModMatrix::from_rows(generators, m, modulus));
}

Subgroup Subgroup::trivial(size_t m, int64_t modulus) {
    return from_generators(ModMatrix(0, m, modulus));
}

Subgroup Subgroup::full(size_t m, int64_t modulus) {
    return from_generators(ModMatrix::identity(m, modulus));
}

std::vector<IntVec> Subgroup::generators() const {
    std::vector<IntVec> result;
    for (size_t j = 0; j < m_; j++) {
        if (pivot(j) == modulus_) {
            continue;
        }
        auto row = basis_row(j);
        IntVec g(row.begin(), row.end());
        for (auto &x : g) {
            x = mod_floor(x, modulus_);
        }
        result.push_back(std::move(g));
    }
    return result;
}

ModMatrix Subgroup::generator_matrix() const {
    return ModMatrix::from_rows(generators(), m_, modulus_);
}

BigInt Subgroup::order() const {
    BigInt result = 1;
    for (size_t j = 0; j < m_; j++) {
        result *= modulus_ / pivot(j);
    }
    return result;
}

uint64_t Subgroup::order_u64() const {
    BigInt o = order();
    if (o > BigInt(INT64_MAX)) {
        throw std::overflow_error("subgroup order does not fit in 63 bits");
    }
    return static_cast<uint64_t>(o);
}

bool Subgroup::is_trivial() const {
    for (size_t j = 0; j < m_; j++) {
        if (pivot(j) != modulus_) {
            return false;
        }
    }
    return true;
}

bool Subgroup::contains(std::span<const int64_t> v) const {
    if (v.size() != m_) {
        throw std::invalid_argument(
            "vector has length " + std::to_string(v.size()) + ", subgroup lives in rank " + std::to_string(m_));
    }
    IntVec w(v.begin(), v.end());
    for (auto &x : w) {
        x = mod_floor(x, modulus_);
    }
    for (size_t j = 0; j < m_; j++) {
        int64_t p = pivot(j);
        if (w[j] % p != 0) {
            return false;
        }
        int64_t c = w[j] / p;
        if (c == 0) {
            continue;
        }
        for (size_t k = j; k < m_; k++) {
            w[k] = mod_floor(w[k] - c * basis_[j * m_ + k], modulus_);
        }
    }
    return true;
}

std::vector<IntVec> Subgroup::elements() const {
    if (order() > BigInt(1 << 24)) {
        throw std::length_error("refusing to enumerate a subgroup with more than 2^24 elements");
    }
    std::vector<IntVec> result{IntVec(m_, 0)};
    for (size_t j = 0; j < m_; j++) {
        int64_t cyc = modulus_ / pivot(j);
        if (cyc == 1) {
            continue;
        }
        size_t base = result.size();
        for (int64_t c = 1; c < cyc; c++) {
            for (size_t e = 0; e < base; e++) {
                IntVec x = result[e];
                for (size_t k = j; k < m_; k++) {
                    x[k] = mod_floor(x[k] + c * basis_[j * m_ + k], modulus_);
                }
                result.push_back(std::move(x));
            }
        }
    }
    return result;
}

Subgroup intersect(const Subgroup &a, const Subgroup &b) {
    check_same_ambient(a, b);
    ModMatrix stacked = annihilator(a).generator_matrix();
    for (const auto &g : annihilator(b).generators()) {
        stacked.append_row(g);
    }
    return kernel_mod(stacked);
}

Subgroup sum(const Subgroup &a, const Subgroup &b) {
    check_same_ambient(a, b);
    auto gens = a.generators();
    for (auto &g : b.generators()) {
        gens.push_back(std::move(g));
    }
    return Subgroup::from_generators(gens, a.ambient_rank(), a.modulus());
}

Subgroup project(const Subgroup &s, std::span<const size_t> coords) {
    if (coords.empty()) {
        throw std::invalid_argument("projection onto an empty coordinate set");
    }
    for (size_t c : coords) {
        if (c >= s.ambient_rank()) {
            throw std::out_of_range("projection coordinate " + std::to_string(c) + " out of range");
        }
    }
    ModMatrix image(0, coords.size(), s.modulus());
    IntVec row(coords.size());
    for (const auto &g : s.generators()) {
        for (size_t k = 0; k < coords.size(); k++) {
            row[k] = g[coords[k]];
        }
        image.append_row(row);
    }
    return Subgroup::from_generators(image);
}

Subgroup kernel_mod(const ModMatrix &a) {
    // Lattice spanned by (A e_k, e_k) and d*Z^{r+m}; the rows of its Hermite
    // form below the first r pivots span the kernel.
    size_t r = a.rows();
    size_t m = a.cols();
    int64_t d = a.modulus();
    std::vector<IntVec> lifted;
    lifted.reserve(m);
    for (size_t k = 0; k < m; k++) {
        IntVec row(r + m, 0);
        for (size_t i = 0; i < r; i++) {
            row[i] = a(i, k);
        }
        row[r + k] = 1;
        lifted.push_back(std::move(row));
    }
    auto h = hermite_lattice_basis(std::move(lifted), r + m, d);
    std::vector<IntVec> kernel_rows;
    for (size_t i = r; i < r + m; i++) {
        kernel_rows.emplace_back(h.begin() + static_cast<ptrdiff_t>(i * (r + m) + r),
                                 h.begin() + static_cast<ptrdiff_t>((i + 1) * (r + m)));
    }
    return Subgroup::from_generators(kernel_rows, m, d);
}

Subgroup annihilator(const Subgroup &s) {
    return kernel_mod(s.generator_matrix());
}

size_t SubgroupHash::operator()(const Subgroup &s) const noexcept {
    size_t h = std::hash<int64_t>{}(s.modulus()) ^ (s.ambient_rank() << 1);
    for (int64_t x : s.basis()) {
        h ^= std::hash<int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace stabent
