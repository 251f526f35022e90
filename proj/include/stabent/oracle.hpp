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

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "stabent/phasespace.hpp"
#include "stabent/stabilizer.hpp"

namespace stabent {

// Dense Hilbert-space ground truth. Everything here is deliberately naive:
// it exists to check the phase-space formulas, not to be fast.

using DenseOperator = Eigen::MatrixXcd;

inline constexpr double kStructuralTolerance = 1e-9;
inline constexpr double kSpectralTolerance = 1e-8;
/// Largest Hilbert-space dimension d^n the oracle will build.
inline constexpr int64_t kDenseLimit = 4096;

/// Single-particle Weyl operator, (w(p,q) psi)(x) = e^{i pi (2px - pq)/d} psi(x - q).
/// p and q may be arbitrary integers; the phase uses them unreduced.
DenseOperator weyl(int64_t d, int64_t p, int64_t q);

/// Tensor product of single-particle Weyl operators over the (p_i, q_i)
/// pairs of `v`. Particle 1 is the most significant tensor factor.
DenseOperator weyl_n(const PhaseSpace &ps, std::span<const int64_t> v);

/// For odd d: the representative of v mod d in [0, 2d) with every entry even.
/// Weyl operators evaluated on these lifts form a genuine representation of
/// any isotropic subgroup.
IntVec even_lift(std::span<const int64_t> v, int64_t d);

/// Code projector of an isotropic subgroup. Odd d sums w(even_lift(m)) over
/// all m in M; even d takes the ordered product over the canonical generators
/// g_j of sum_{x < ord(g_j)} w(g_j)^x. Normalized by 1/|M|.
DenseOperator stabilizer_projector(const StabilizerState &st);

/// P / tr P.
DenseOperator stabilizer_density(const StabilizerState &st);

/// Partial trace keeping the particles in `keep`.
DenseOperator reduced_state(const DenseOperator &rho, const PhaseSpace &ps, ParticleMask keep);

/// Von Neumann entropy (alpha empty) or Renyi-alpha entropy, in units of log(base).
double spectral_entropy(const DenseOperator &rho, std::optional<double> alpha, double base);

/// True if rho == w(a) sigma w(a)^dagger for some a in the phase space.
bool equal_up_to_weyl_conjugation(
    const DenseOperator &rho, const DenseOperator &sigma, const PhaseSpace &ps, double tolerance);

/// Real function on all d^{2n} phase-space points. Points are indexed in
/// mixed radix d over the coordinates (p_1, q_1, ..., p_n, q_n), first
/// coordinate most significant.
class WignerTable {
   public:
    WignerTable(PhaseSpace ps, std::vector<double> values);

    const PhaseSpace &phase_space() const { return ps_; }
    const std::vector<double> &values() const { return values_; }
    double at(std::span<const int64_t> point) const;
    size_t index_of(std::span<const int64_t> point) const;
    IntVec point_of(size_t index) const;
    double total() const;

   private:
    PhaseSpace ps_;
    std::vector<double> values_;
};

/// Discrete Wigner function (odd d only).
WignerTable wigner(const DenseOperator &rho, const PhaseSpace &ps);

/// Sum of W over the coordinates of particles outside `keep`.
WignerTable wigner_marginal(const WignerTable &w, ParticleMask keep);

/// Largest deviations found while comparing one stabilizer state against the
/// dense oracle. Negative values mean "leg not run".
struct OracleDeviation {
    double projector_idempotent = 0;
    double projector_hermitian = 0;
    double projector_trace = 0;
    double reduction = 0;
    double von_neumann = 0;
    double renyi = 0;
    double wigner_uniform = -1;
    double wigner_marginal = -1;
    bool reduction_up_to_weyl = true;
    bool phase_space_identity = true;

    void merge(const OracleDeviation &other);
};

struct OracleTolerances {
    double structural = kStructuralTolerance;
    double spectral = kSpectralTolerance;
    double wigner = 1e-10;
};

bool within(const OracleDeviation &dev, const OracleTolerances &tol = {});

/// Full oracle comparison for one state: projector laws, reduced states
/// against rho(M_I) (for even d up to conjugation by a Weyl operator on the
/// kept particles), spectral entropies (von Neumann and Renyi 0.5, 2, 3)
/// against the subgroup formula, and for odd d the Wigner legs.
OracleDeviation compare_with_oracle(const StabilizerState &st);

/// compare_with_oracle over a corpus, merged. OpenMP across states.
OracleDeviation compare_corpus_with_oracle(const std::vector<StabilizerState> &corpus);
OracleDeviation compare_corpus_with_oracle_serial(const std::vector<StabilizerState> &corpus);

}  // namespace stabent
