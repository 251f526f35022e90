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

#include "stabent/phasespace.hpp"

#include <stdexcept>
#include <string>

namespace stabent {

namespace {

void check_vector(const PhaseSpace &ps, std::span<const int64_t> v) {
    if (v.size() != ps.rank()) {
        throw std::invalid_argument(
            "phase-space vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(ps.rank()));
    }
}

void check_subgroup(const PhaseSpace &ps, const Subgroup &m) {
    if (m.ambient_rank() != ps.rank() || m.modulus() != ps.d()) {
        throw std::invalid_argument("subgroup does not live in this phase space");
    }
}

void check_mask(const PhaseSpace &ps, ParticleMask mask) {
    if (mask == 0) {
        throw std::invalid_argument("empty particle subset");
    }
    if ((mask & ~ps.full_mask()) != 0) {
        throw std::out_of_range("particle subset refers to particles beyond n");
    }
}

}  // namespace

PhaseSpace::PhaseSpace(size_t n, int64_t d) : n_(n), d_(d) {
    if (n == 0 || n > 16) {
        throw std::invalid_argument("particle count must be in [1, 16], got " + std::to_string(n));
    }
    if (d < 2) {
        throw std::invalid_argument("local dimension must be at least 2, got " + std::to_string(d));
    }
}

std::vector<size_t> PhaseSpace::coords(ParticleMask mask) const {
    std::vector<size_t> result;
    for (size_t i = 0; i < n_; i++) {
        if (mask >> i & 1) {
            result.push_back(2 * i);
            result.push_back(2 * i + 1);
        }
    }
    return result;
}

PhaseSpace PhaseSpace::sub_space(ParticleMask mask) const {
    check_mask(*this, mask);
    return PhaseSpace(static_cast<size_t>(popcount(mask)), d_);
}

Subgroup PhaseSpace::local_subspace(ParticleMask mask) const {
    std::vector<IntVec> gens;
    for (size_t c : coords(mask)) {
        IntVec e(rank(), 0);
        e[c] = 1;
        gens.push_back(std::move(e));
    }
    return Subgroup::from_generators(gens, rank(), d_);
}

int64_t symplectic_form_raw(std::span<const int64_t> v, std::span<const int64_t> w) {
    int64_t total = 0;
    for (size_t i = 0; i + 1 < v.size(); i += 2) {
        total += v[i] * w[i + 1] - v[i + 1] * w[i];
    }
    return total;
}

SymplecticValue symplectic_form(const PhaseSpace &ps, std::span<const int64_t> v, std::span<const int64_t> w) {
    check_vector(ps, v);
    check_vector(ps, w);
    int64_t d = ps.d();
    int64_t total = 0;
    for (size_t i = 0; i < ps.rank(); i += 2) {
        total += mod_floor(v[i], d) * mod_floor(w[i + 1], d) - mod_floor(v[i + 1], d) * mod_floor(w[i], d);
    }
    return {mod_floor(total, 2 * d), mod_floor(total, d)};
}

bool is_isotropic(const PhaseSpace &ps, const Subgroup &m) {
    check_subgroup(ps, m);
    auto gens = m.generators();
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (symplectic_form(ps, gens[i], gens[j]).reduced != 0) {
                return false;
            }
        }
    }
    return true;
}

bool is_isotropic_mod_2d(const PhaseSpace &ps, const Subgroup &m) {
    check_subgroup(ps, m);
    auto gens = m.generators();
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (symplectic_form(ps, gens[i], gens[j]).value != 0) {
                return false;
            }
        }
    }
    return true;
}

Subgroup symplectic_complement(const PhaseSpace &ps, const Subgroup &m) {
    check_subgroup(ps, m);
    // Row c with c . v = [v, g]: c_p = g_q, c_q = -g_p.
    ModMatrix pairing(0, ps.rank(), ps.d());
    IntVec row(ps.rank());
    for (const auto &g : m.generators()) {
        for (size_t i = 0; i < ps.rank(); i += 2) {
            row[i] = g[i + 1];
            row[i + 1] = -g[i];
        }
        pairing.append_row(row);
    }
    return kernel_mod(pairing);
}

Subgroup restrict_to(const PhaseSpace &ps, const Subgroup &m, ParticleMask particles) {
    check_subgroup(ps, m);
    check_mask(ps, particles);
    auto local = intersect(m, ps.local_subspace(particles));
    return project(local, ps.coords(particles));
}

Subgroup project_phase(const PhaseSpace &ps, const Subgroup &s, ParticleMask particles) {
    check_subgroup(ps, s);
    check_mask(ps, particles);
    return project(s, ps.coords(particles));
}

}  // namespace stabent
