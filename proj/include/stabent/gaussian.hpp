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
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stabent/inequalities.hpp"
#include "stabent/phasespace.hpp"

namespace stabent {

// Continuous-variable side. Phase-space coordinates are interleaved
// (p_1, q_1, ..., p_n, q_n) like the discrete modules, and entropies are in
// nats.

/// Direct sum of n blocks [[0, 1], [-1, 0]].
Eigen::MatrixXd symplectic_form_matrix(size_t n);

/// Gaussian state with first moments mu and covariance Sigma. sigma_vac is
/// the vacuum variance of the convention Sigma is written in (vacuum
/// Sigma = sigma_vac * I); 1/2 is the convention in which the Wigner function
/// is the normal density with covariance Sigma.
class GaussianState {
   public:
    GaussianState(Eigen::VectorXd mu, Eigen::MatrixXd sigma, double sigma_vac = 0.5);
    static GaussianState vacuum(size_t n, double sigma_vac = 0.5);

    size_t n() const { return n_; }
    const Eigen::VectorXd &mean() const { return mu_; }
    const Eigen::MatrixXd &covariance() const { return sigma_; }
    double vacuum_variance() const { return sigma_vac_; }

    /// Covariance of the Wigner density, i.e. Sigma rescaled to sigma_vac = 1/2.
    Eigen::MatrixXd wigner_covariance() const;

    /// Principal submatrix on the coordinates of the modes in `modes`.
    Eigen::MatrixXd block(ParticleMask modes) const;
    Eigen::MatrixXd wigner_block(ParticleMask modes) const;
    Eigen::VectorXd wigner_mean(ParticleMask modes) const;

   private:
    size_t n_;
    Eigen::VectorXd mu_;
    Eigen::MatrixXd sigma_;
    double sigma_vac_;
};

struct Physicality {
    bool physical = false;
    /// Smallest eigenvalue of Sigma + i sigma_vac Omega.
    double margin = 0;
};

inline constexpr double kPhysicalityTolerance = 1e-9;

/// Uncertainty relation Sigma + i sigma_vac Omega >= 0 (within -1e-9).
Physicality is_physical(const GaussianState &g);

/// log det of a symmetric positive definite matrix via Cholesky; throws
/// std::domain_error otherwise.
double log_det_spd(const Eigen::MatrixXd &a);

/// S_2(rho_I) = 1/2 log det Sigma_W,I + |I| log 2.
double renyi2_quantum(const GaussianState &g, ParticleMask modes);

/// H_alpha(X_I) = 1/2 log det Sigma_W,I + |I| (log 2 pi - log(alpha) / (1 - alpha)).
double renyi_alpha_classical(const GaussianState &g, ParticleMask modes, double alpha);

/// H(X_I) = 1/2 log det Sigma_W,I + |I| (log 2 pi + 1).
double shannon_classical(const GaussianState &g, ParticleMask modes);

/// S_2(rho_I) recovered from H_alpha by subtracting |I| (log pi - log(alpha) / (1 - alpha)).
double renyi2_from_classical(const GaussianState &g, ParticleMask modes, double alpha);

struct MonteCarloEstimate {
    /// Estimate of H_2(X_I) = -log int W_I^2.
    double entropy = 0;
    /// Jackknife standard error of `entropy`.
    double standard_error = 0;
    size_t samples = 0;
};

/// Number of independently seeded shards; fixed so that results do not
/// depend on the thread count.
inline constexpr size_t kMonteCarloShards = 64;

/// Importance-sampling estimate of H_2 using W itself: int W^2 = E_W[W(X)].
/// Deterministic given the seed. OpenMP across shards.
MonteCarloEstimate mc_renyi2(const GaussianState &g, ParticleMask modes, size_t samples, uint64_t seed);
MonteCarloEstimate mc_renyi2_serial(const GaussianState &g, ParticleMask modes, size_t samples, uint64_t seed);

/// Renyi-2 entropies S_2(rho_I) for every nonempty subset, indexed by mask - 1.
class GaussianEntropyVector {
   public:
    GaussianEntropyVector(size_t n, std::vector<double> entries);

    size_t n() const { return n_; }
    const std::vector<double> &entries() const { return entries_; }
    double at(ParticleMask mask) const { return entries_.at(mask - 1); }

   private:
    size_t n_;
    std::vector<double> entries_;
};

GaussianEntropyVector entropy_vector_gaussian(const GaussianState &g);

// Random states for tests and searches.

/// Symplectic matrix O1 Z O2 with orthogonal-symplectic O_i drawn from random
/// unitaries and single-mode squeezing |r| <= max_squeeze.
Eigen::MatrixXd random_symplectic(size_t n, std::mt19937_64 &rng, double max_squeeze);

/// S diag(nu) S^T with symplectic S and thermal factors nu in [1, 1 + max_excess]
/// times sigma_vac.
GaussianState random_physical_state(size_t n, std::mt19937_64 &rng, double sigma_vac = 0.5);

/// sigma_vac (1 + floor) I + G G^T; physical with margin >= sigma_vac * floor.
GaussianState wishart_state(const Eigen::MatrixXd &g, double floor, double sigma_vac = 0.5);

/// Named test states: "vacuum" (1 mode), "thermal" (1 mode, Sigma = I) and
/// "correlated" (2 modes, noisy two-mode squeezed with a p-q cross term).
GaussianState gaussian_fixture(const std::string &name);

/// Ingleton combination I(1:2|3) + I(1:2|4) + I(3:4) - I(1:2) on the Renyi-2
/// entropies of a 4-mode state.
double gaussian_ingleton_value(const GaussianState &g);

enum class SearchStrategy {
    random_wishart,
    random_pure_plus_noise,
    local_perturbation,
};

const char *to_string(SearchStrategy s);
SearchStrategy parse_strategy(const std::string &name);

struct IngletonSearchResult {
    bool found = false;
    Eigen::MatrixXd sigma;
    double value = 0;
    double margin = 0;
    uint64_t seed = 0;
    size_t iterations = 0;
    SearchStrategy strategy = SearchStrategy::local_perturbation;
};

/// Success threshold: Ingleton value below -1e-6 with margin above 1e-6.
inline constexpr double kIngletonViolationThreshold = -1e-6;
inline constexpr double kIngletonMarginThreshold = 1e-6;

/// Seeded search over physical 4-mode covariance matrices (sigma_vac = 1/2)
/// for the smallest Ingleton value. The budget is split across `shards`
/// independently seeded runs (OpenMP), merged by minimum. Every candidate
/// is physical by construction.
IngletonSearchResult ingleton_search(uint64_t seed, size_t iterations, SearchStrategy strategy, size_t shards = 8);

}  // namespace stabent
