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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "stabent/phasespace.hpp"

using namespace stabent;
using namespace stabent::testing;

namespace {

const Subgroup kBell = Subgroup::from_generators({{0, 1, 0, 1}, {1, 0, 1, 0}}, 4, 2);

}  // namespace

TEST_CASE("symplectic_form examples") {
    PhaseSpace p1(1, 3);
    auto a = symplectic_form(p1, IntVec{1, 0}, IntVec{0, 1});
    CHECK(a.reduced == 1);
    CHECK(a.value == 1);
    auto b = symplectic_form(p1, IntVec{2, 1}, IntVec{2, 1});
    CHECK(b.reduced == 0);
    CHECK(b.value == 0);

    PhaseSpace p2(2, 2);
    auto c = symplectic_form(p2, IntVec{0, 1, 0, 1}, IntVec{1, 0, 1, 0});
    CHECK(c.reduced == 0);
    CHECK(c.value == 2);
    CHECK(symplectic_form_raw(IntVec{0, 1, 0, 1}, IntVec{1, 0, 1, 0}) == -2);

    CHECK_THROWS_AS(symplectic_form(p2, IntVec{1, 0}, IntVec{0, 1}), std::invalid_argument);
}

TEST_CASE("symplectic form is antisymmetric and bilinear mod d") {
    std::mt19937_64 rng(7);
    for (int64_t d : {2, 3, 4, 5, 6}) {
        PhaseSpace ps(3, d);
        auto draw = [&] {
            IntVec v(6);
            for (auto &x : v) {
                x = static_cast<int64_t>(rng() % static_cast<uint64_t>(d));
            }
            return v;
        };
        for (int trial = 0; trial < 100; trial++) {
            auto u = draw(), v = draw(), w = draw();
            auto uv = symplectic_form(ps, u, v).reduced;
            CHECK(mod_floor(uv + symplectic_form(ps, v, u).reduced, d) == 0);
            CHECK(symplectic_form(ps, u, u).reduced == 0);
            auto lhs = symplectic_form(ps, add(u, w, d), v).reduced;
            CHECK(lhs == mod_floor(uv + symplectic_form(ps, w, v).reduced, d));
            CHECK(symplectic_form(ps, u, v).value == mod_floor(symplectic_form_raw(u, v), 2 * d));
        }
    }
}

TEST_CASE("is_isotropic examples") {
    CHECK(is_isotropic(PhaseSpace(2, 2), Subgroup::trivial(4, 2)));
    CHECK(is_isotropic(PhaseSpace(2, 2), kBell));
    CHECK_FALSE(is_isotropic_mod_2d(PhaseSpace(2, 2), kBell));
    CHECK_FALSE(is_isotropic(PhaseSpace(1, 3), Subgroup::full(2, 3)));
}

TEST_CASE("symplectic_complement examples") {
    CHECK(symplectic_complement(PhaseSpace(2, 3), Subgroup::trivial(4, 3)) == Subgroup::full(4, 3));
    CHECK(symplectic_complement(PhaseSpace(2, 2), kBell) == kBell);
    auto m = Subgroup::from_generators({{1, 0}}, 2, 3);
    CHECK(symplectic_complement(PhaseSpace(1, 3), m) == m);
}

TEST_CASE("restrict and project examples") {
    PhaseSpace ps(2, 2);
    CHECK(restrict_to(ps, kBell, 0b01).is_trivial());
    CHECK(restrict_to(ps, kBell, 0b01).ambient_rank() == 2);
    CHECK(restrict_to(ps, kBell, 0b11) == kBell);
    CHECK(restrict_to(PhaseSpace(2, 5), Subgroup::full(4, 5), 0b10) == Subgroup::full(2, 5));
    CHECK(project_phase(ps, kBell, 0b01) == Subgroup::full(2, 2));
    CHECK(project_phase(ps, kBell, 0b11) == kBell);
    CHECK(project_phase(ps, Subgroup::trivial(4, 2), 0b01).is_trivial());
    CHECK_THROWS(project_phase(ps, kBell, 0));
    CHECK_THROWS(restrict_to(ps, kBell, 0));
}

TEST_CASE("particle coordinates follow the interleaved layout") {
    PhaseSpace ps(3, 2);
    CHECK(ps.coords(0b101) == std::vector<size_t>{0, 1, 4, 5});
    CHECK(ps.full_mask() == 0b111);
    auto local = ps.local_subspace(0b010);
    CHECK(local.order() == 4);
    CHECK(local.contains(IntVec{0, 0, 1, 1, 0, 0}));
    CHECK_FALSE(local.contains(IntVec{1, 0, 0, 0, 0, 0}));
}

TEST_CASE("exhaustive complement duality and projection of the complement") {
    for (auto [d, n] : std::vector<std::pair<int64_t, size_t>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}) {
        CAPTURE(d);
        CAPTURE(n);
        PhaseSpace ps(n, d);
        BigInt total = big_pow(d, 2 * n);
        for (const auto &set : all_subgroups(2 * n, d)) {
            auto m = Subgroup::from_generators(std::vector<IntVec>(set.begin(), set.end()), 2 * n, d);
            auto perp = symplectic_complement(ps, m);
            CHECK(m.order() * perp.order() == total);
            CHECK(symplectic_complement(ps, perp) == m);
            bool iso = is_isotropic(ps, m);
            CHECK(iso == isotropic_brute(set, d));
            CHECK(iso == (intersect(m, perp) == m));
            if (d <= 3 || n == 1) {
                CHECK(element_set(perp) == complement_brute(set, 2 * n, d));
            }
            if (!iso) {
                continue;
            }
            for (ParticleMask mask = 1; mask <= ps.full_mask(); mask++) {
                auto sub = ps.sub_space(mask);
                auto local = restrict_to(ps, m, mask);
                CHECK(project_phase(ps, perp, mask) == symplectic_complement(sub, local));
                CHECK(is_isotropic(sub, local));
            }
        }
    }
}
