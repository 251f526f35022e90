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

#include <cstdint>
#include <span>
#include <vector>

#include "stabent/zmod.hpp"

namespace stabent {

/// Bitmask over particles; particle 1 is the least significant bit.
using ParticleMask = uint32_t;

inline int popcount(ParticleMask mask) {
    return __builtin_popcount(mask);
}

/// V = Z_d^{2n} with coordinates laid out as (p_1, q_1, ..., p_n, q_n).
class PhaseSpace {
   public:
    PhaseSpace(size_t n, int64_t d);

    size_t n() const { return n_; }
    int64_t d() const { return d_; }
    size_t rank() const { return 2 * n_; }
    ParticleMask full_mask() const { return static_cast<ParticleMask>((uint64_t{1} << n_) - 1); }

    /// Coordinates of the particles in `mask`, ascending.
    std::vector<size_t> coords(ParticleMask mask) const;

    /// Phase space of the particles in `mask`.
    PhaseSpace sub_space(ParticleMask mask) const;

    /// V_I as a subgroup of the full space.
    Subgroup local_subspace(ParticleMask mask) const;

    bool operator==(const PhaseSpace &) const = default;

   private:
    size_t n_;
    int64_t d_;
};

struct SymplecticValue {
    /// Form evaluated on the lifts in [0, d), reduced into [0, 2d).
    int64_t value;
    /// Same, reduced into [0, d).
    int64_t reduced;
};

/// [v, v'] = sum_i p_i q'_i - q_i p'_i.
SymplecticValue symplectic_form(const PhaseSpace &ps, std::span<const int64_t> v, std::span<const int64_t> w);

/// Raw integer value of the form on the given integer vectors (no reduction).
int64_t symplectic_form_raw(std::span<const int64_t> v, std::span<const int64_t> w);

/// [g_i, g_j] = 0 mod d for all pairs of canonical generators.
bool is_isotropic(const PhaseSpace &ps, const Subgroup &m);

/// Stricter diagnostic: the form vanishes mod 2d on canonical generators.
bool is_isotropic_mod_2d(const PhaseSpace &ps, const Subgroup &m);

/// M^perp = {v : [v, m] = 0 mod d for all m in M}.
Subgroup symplectic_complement(const PhaseSpace &ps, const Subgroup &m);

/// M ∩ V_I expressed in the 2|I| coordinates of the particles in I.
Subgroup restrict_to(const PhaseSpace &ps, const Subgroup &m, ParticleMask particles);

/// pi_I(S) expressed in the 2|I| coordinates of the particles in I.
Subgroup project_phase(const PhaseSpace &ps, const Subgroup &s, ParticleMask particles);

}  // namespace stabent
