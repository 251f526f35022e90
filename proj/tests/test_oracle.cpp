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

#include <complex>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "stabent/oracle.hpp"

using namespace stabent;
using cd = std::complex<double>;

namespace {

const cd I1(0, 1);

DenseOperator mat2(cd a, cd b, cd c, cd d) {
    DenseOperator m(2, 2);
    m << a, b, c, d;
    return m;
}

const DenseOperator kX = mat2(0, 1, 1, 0);
const DenseOperator kZ = mat2(1, 0, 0, -1);
const DenseOperator kY = mat2(0, -I1, I1, 0);
const DenseOperator kI = DenseOperator::Identity(2, 2);

double dist(const DenseOperator &a, const DenseOperator &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

DenseOperator random_density(int64_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    DenseOperator a(dim, dim);
    for (int64_t i = 0; i < dim; i++) {
        for (int64_t j = 0; j < dim; j++) {
            a(i, j) = cd(g(rng), g(rng));
        }
    }
    DenseOperator rho = a * a.adjoint();
    return rho / rho.trace().real();
}

IntVec random_vec(size_t m, int64_t d, std::mt19937_64 &rng) {
    IntVec v(m);
    for (auto &x : v) {
        x = static_cast<int64_t>(rng() % static_cast<uint64_t>(d));
    }
    return v;
}

StabilizerState state(size_t n, int64_t d, std::vector<IntVec> gens) {
    return StabilizerState(PhaseSpace(n, d), Subgroup::from_generators(gens, 2 * n, d));
}

}  // namespace

TEST_CASE("weyl examples") {
    CHECK(dist(weyl(2, 0, 1), kX) < 1e-12);
    CHECK(dist(weyl(2, 1, 0), kZ) < 1e-12);
    CHECK(dist(weyl(2, 1, 1), kY) < 1e-12);
    CHECK(dist(weyl(5, 0, 0), DenseOperator::Identity(5, 5)) < 1e-12);
    for (int64_t d : {2, 3, 4, 7}) {
        for (int64_t p = 0; p < d; p++) {
            for (int64_t q = 0; q < d; q++) {
                auto w = weyl(d, p, q);
                CHECK(dist(w * w.adjoint(), DenseOperator::Identity(d, d)) < 1e-12);
                double expected = (p == 0 && q == 0) ? static_cast<double>(d) : 0.0;
                CHECK(std::abs(w.trace() - cd(expected)) < 1e-12);
            }
        }
    }
}

TEST_CASE("weyl_n examples") {
    PhaseSpace ps(2, 2);
    CHECK(dist(weyl_n(ps, IntVec{0, 1, 0, 1}), kron(kX, kX)) < 1e-12);
    CHECK(dist(weyl_n(ps, IntVec{1, 0, 0, 1}), kron(kZ, kX)) < 1e-12);
    CHECK(dist(weyl_n(ps, IntVec{0, 0, 0, 0}), DenseOperator::Identity(4, 4)) < 1e-12);
    PhaseSpace p3(1, 3);
    DenseOperator lhs = weyl_n(p3, IntVec{1, 0}) * weyl_n(p3, IntVec{0, 1});
    DenseOperator rhs = std::exp(I1 * (M_PI / 3)) * weyl_n(p3, IntVec{1, 1});
    CHECK(dist(lhs, rhs) < 1e-12);
    CHECK_THROWS(weyl_n(ps, IntVec{1, 0}));
}

TEST_CASE("composition law on random pairs") {
    std::mt19937_64 rng(2024);
    for (auto [d, n] : std::vector<std::pair<int64_t, size_t>>{{2, 2}, {3, 2}, {4, 1}, {5, 1}}) {
        PhaseSpace ps(n, d);
        for (int trial = 0; trial < 200; trial++) {
            auto v = random_vec(2 * n, d, rng);
            auto w = random_vec(2 * n, d, rng);
            IntVec s(2 * n);
            for (size_t k = 0; k < 2 * n; k++) {
                s[k] = v[k] + w[k];
            }
            auto phase = symplectic_form(ps, v, w).value;
            DenseOperator lhs = weyl_n(ps, v) * weyl_n(ps, w);
            DenseOperator rhs = std::exp(I1 * (M_PI * static_cast<double>(phase) / static_cast<double>(d))) * weyl_n(ps, s);
            CHECK(dist(lhs, rhs) < kStructuralTolerance);
        }
    }
}

TEST_CASE("even lifts") {
    CHECK(even_lift(IntVec{1, 2}, 3) == IntVec{4, 2});
    CHECK(even_lift(IntVec{0, 1, 2}, 5) == IntVec{0, 6, 2});
    CHECK_THROWS(even_lift(IntVec{1}, 4));
}

TEST_CASE("projector examples") {
    auto trivial = state(2, 3, {});
    CHECK(dist(stabilizer_projector(trivial), DenseOperator::Identity(9, 9)) < 1e-12);

    auto bell = state(2, 2, {{0, 1, 0, 1}, {1, 0, 1, 0}});
    DenseOperator expected = 0.25 * (kron(kI, kI) + kron(kX, kX) + kron(kZ, kZ) - kron(kY, kY));
    auto p = stabilizer_projector(bell);
    CHECK(dist(p, expected) < 1e-12);
    CHECK(std::abs(p.trace() - cd(1)) < 1e-12);
    CHECK(dist(p * p, p) < 1e-12);

    auto z3 = state(1, 3, {{1, 0}});
    auto pz = stabilizer_projector(z3);
    CHECK(std::abs(pz.trace() - cd(1)) < 1e-12);
    CHECK(dist(pz * pz, pz) < 1e-12);
    CHECK(std::abs(pz(0, 0) - cd(1)) < 1e-12);

    // Odd d with a generator whose naive phases do not close.
    auto diag = state(1, 3, {{1, 1}});
    auto pd = stabilizer_projector(diag);
    CHECK(dist(pd * pd, pd) < 1e-12);
    CHECK(std::abs(pd.trace() - cd(1)) < 1e-12);

    // Non-free subgroup at d=4.
    auto half = state(1, 4, {{2, 0}});
    auto ph = stabilizer_projector(half);
    CHECK(dist(ph * ph, ph) < 1e-12);
    CHECK(std::abs(ph.trace() - cd(2)) < 1e-12);
}

TEST_CASE("reduced_state examples") {
    std::mt19937_64 rng(1);
    PhaseSpace ps(2, 3);
    auto rho = random_density(3, rng);
    auto sigma = random_density(3, rng);
    auto prod = kron(rho, sigma);
    CHECK(dist(reduced_state(prod, ps, 0b01), rho) < 1e-12);
    CHECK(dist(reduced_state(prod, ps, 0b10), sigma) < 1e-12);
    CHECK(dist(reduced_state(prod, ps, 0b11), prod) < 1e-12);

    auto bell = stabilizer_density(state(2, 2, {{0, 1, 0, 1}, {1, 0, 1, 0}}));
    CHECK(dist(reduced_state(bell, PhaseSpace(2, 2), 0b01), kI / 2) < 1e-12);
    CHECK_THROWS(reduced_state(bell, PhaseSpace(2, 3), 0b01));
    CHECK_THROWS(reduced_state(bell, PhaseSpace(2, 2), 0));
}

TEST_CASE("spectral_entropy examples") {
    DenseOperator pure = DenseOperator::Zero(4, 4);
    pure(1, 1) = 1;
    DenseOperator mixed = DenseOperator::Identity(9, 9) / 9.0;
    for (std::optional<double> alpha : {std::optional<double>{}, std::optional<double>{0.5},
                                         std::optional<double>{2.0}, std::optional<double>{3.0}}) {
        CHECK(spectral_entropy(pure, alpha, 2) == doctest::Approx(0).epsilon(1e-12));
        CHECK(spectral_entropy(mixed, alpha, 3) == doctest::Approx(2).epsilon(1e-12));
        CHECK(spectral_entropy(kI / 2, alpha, 2) == doctest::Approx(1).epsilon(1e-12));
    }
    DenseOperator bad = DenseOperator::Identity(2, 2);
    bad(1, 1) = -0.5;
    bad(0, 0) = 1.5;
    CHECK_THROWS(spectral_entropy(bad, {}, 2));
}

TEST_CASE("wigner examples") {
    PhaseSpace p1(1, 3);
    auto w = wigner(stabilizer_density(state(1, 3, {{1, 0}})), p1);
    for (size_t i = 0; i < 9; i++) {
        auto pt = w.point_of(i);
        double expected = pt[1] == 0 ? 1.0 / 3 : 0.0;
        CHECK(std::abs(w.values()[i] - expected) < 1e-10);
        CHECK(w.index_of(pt) == i);
    }

    PhaseSpace p2(2, 3);
    auto flat = wigner(DenseOperator::Identity(9, 9) / 9.0, p2);
    for (double x : flat.values()) {
        CHECK(std::abs(x - 1.0 / 81) < 1e-12);
    }

    auto epr = state(2, 3, {{1, 0, 1, 0}, {0, 1, 0, 2}});
    auto rho = stabilizer_density(epr);
    auto we = wigner(rho, p2);
    CHECK(epr.complement().order() == 9);
    for (size_t i = 0; i < we.values().size(); i++) {
        double expected = epr.complement().contains(we.point_of(i)) ? 1.0 / 9 : 0.0;
        CHECK(std::abs(we.values()[i] - expected) < 1e-10);
    }
    auto marg = wigner_marginal(we, 0b01);
    for (double x : marg.values()) {
        CHECK(std::abs(x - 1.0 / 9) < 1e-10);
    }
    CHECK(dist(DenseOperator(Eigen::Map<const Eigen::VectorXd>(wigner_marginal(we, 0b11).values().data(), 81).cast<cd>()),
               DenseOperator(Eigen::Map<const Eigen::VectorXd>(we.values().data(), 81).cast<cd>())) < 1e-15);

    CHECK_THROWS(wigner(kI, PhaseSpace(1, 2)));
    CHECK_THROWS(wigner_marginal(we, 0));
}

TEST_CASE("wigner marginals commute with partial trace on random states") {
    std::mt19937_64 rng(99);
    for (auto [d, n] : std::vector<std::pair<int64_t, size_t>>{{3, 2}, {5, 2}, {3, 3}}) {
        PhaseSpace ps(n, d);
        int64_t dim = 1;
        for (size_t i = 0; i < n; i++) {
            dim *= d;
        }
        auto rho = random_density(dim, rng);
        auto w = wigner(rho, ps);
        CHECK(w.total() == doctest::Approx(1.0).epsilon(1e-12));
        for (ParticleMask keep = 1; keep <= ps.full_mask(); keep++) {
            auto lhs = wigner_marginal(w, keep);
            auto rhs = wigner(reduced_state(rho, ps, keep), ps.sub_space(keep));
            REQUIRE(lhs.values().size() == rhs.values().size());
            for (size_t i = 0; i < lhs.values().size(); i++) {
                CHECK(std::abs(lhs.values()[i] - rhs.values()[i]) < 1e-10);
            }
        }
        // Product states have product Wigner functions.
        auto a = random_density(d, rng);
        auto b = random_density(d, rng);
        PhaseSpace p2(2, d);
        auto wp = wigner(kron(a, b), p2);
        auto wa = wigner(a, PhaseSpace(1, d));
        auto wb = wigner(b, PhaseSpace(1, d));
        for (size_t i = 0; i < wp.values().size(); i++) {
            auto pt = wp.point_of(i);
            double expected = wa.at(IntVec{pt[0], pt[1]}) * wb.at(IntVec{pt[2], pt[3]});
            CHECK(std::abs(wp.values()[i] - expected) < 1e-12);
        }
    }
}

TEST_CASE("entropies do not depend on the basis used for the projector") {
    // Rebuild P(B) at d=2 from a randomly mixed basis and compare spectra of reductions.
    std::mt19937_64 rng(17);
    PhaseSpace ps(3, 2);
    auto corpus = enumerate_isotropic(ps);
    for (size_t s = 0; s < corpus.size(); s += 7) {
        const auto &st = corpus[s];
        auto gens = st.subgroup().generators();
        for (int round = 0; round < 4 && gens.size() > 1; round++) {
            size_t i = rng() % gens.size(), j = rng() % gens.size();
            if (i != j) {
                for (size_t k = 0; k < gens[i].size(); k++) {
                    gens[i][k] = (gens[i][k] + gens[j][k]) % 2;
                }
            }
        }
        std::shuffle(gens.begin(), gens.end(), rng);
        DenseOperator p = DenseOperator::Identity(8, 8);
        for (const auto &g : gens) {
            p = p * (DenseOperator::Identity(8, 8) + weyl_n(ps, g));
        }
        p /= static_cast<double>(1u << gens.size());
        CHECK(dist(p * p, p) < 1e-12);
        DenseOperator rho = p / p.trace().real();
        auto canonical = stabilizer_density(st);
        for (ParticleMask keep = 1; keep <= ps.full_mask(); keep++) {
            double a = spectral_entropy(reduced_state(rho, ps, keep), {}, 2);
            double b = spectral_entropy(reduced_state(canonical, ps, keep), {}, 2);
            CHECK(std::abs(a - b) < kSpectralTolerance);
            CHECK(std::abs(a - quantum_entropy(st, keep).value()) < kSpectralTolerance);
        }
    }
}

TEST_CASE("even-d reductions agree with the reduced subgroup up to a local Weyl conjugation") {
    auto st = state(3, 2, {{1, 0, 1, 0, 0, 1}, {0, 1, 0, 1, 0, 1}, {1, 0, 0, 1, 1, 1}});
    auto rho = stabilizer_density(st);
    PhaseSpace ps(3, 2);
    for (ParticleMask keep = 1; keep <= ps.full_mask(); keep++) {
        auto sub = ps.sub_space(keep);
        auto local = StabilizerState(sub, restrict_to(ps, st.subgroup(), keep));
        CHECK(equal_up_to_weyl_conjugation(reduced_state(rho, ps, keep), stabilizer_density(local), sub, 1e-9));
    }
    CHECK_FALSE(equal_up_to_weyl_conjugation(kI / 2, kron(kI, kI) / 4, PhaseSpace(1, 2), 1e-9));
}

TEST_CASE("corpus comparison within tolerances") {
    for (auto [d, n] : std::vector<std::pair<int64_t, size_t>>{{2, 2}, {3, 2}, {4, 1}, {4, 2}, {5, 1}, {6, 1}, {6, 2}, {8, 1}}) {
        CAPTURE(d);
        CAPTURE(n);
        auto corpus = enumerate_isotropic(PhaseSpace(n, d));
        auto dev = compare_corpus_with_oracle(corpus);
        CHECK(within(dev));
        if (d % 2 == 1) {
            CHECK(dev.wigner_uniform >= 0);
            CHECK(dev.wigner_uniform < 1e-10);
        } else {
            CHECK(dev.wigner_uniform == -1);
        }
        auto serial = compare_corpus_with_oracle_serial(corpus);
        CHECK(serial.von_neumann == dev.von_neumann);
        CHECK(serial.projector_idempotent == dev.projector_idempotent);
    }
}
