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

#include "stabent/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace stabent {

namespace {

constexpr double kLogTwoPi = 1.8378770664093453;  // log(2 pi)

void check_modes(const GaussianState &g, ParticleMask modes) {
    if (modes == 0) {
        throw std::invalid_argument("empty mode subset");
    }
    if ((modes >> g.n()) != 0) {
        throw std::out_of_range("mode subset refers to modes beyond n");
    }
}

std::vector<Eigen::Index> coordinates(size_t n, ParticleMask modes) {
    std::vector<Eigen::Index> idx;
    for (size_t i = 0; i < n; i++) {
        if (modes >> i & 1) {
            idx.push_back(static_cast<Eigen::Index>(2 * i));
            idx.push_back(static_cast<Eigen::Index>(2 * i + 1));
        }
    }
    return idx;
}

Eigen::MatrixXd principal(const Eigen::MatrixXd &a, const std::vector<Eigen::Index> &idx) {
    auto k = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd result(k, k);
    for (Eigen::Index r = 0; r < k; r++) {
        for (Eigen::Index c = 0; c < k; c++) {
            result(r, c) = a(idx[static_cast<size_t>(r)], idx[static_cast<size_t>(c)]);
        }
    }
    return result;
}

Eigen::MatrixXd standard_normal(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index c = 0; c < cols; c++) {
        for (Eigen::Index r = 0; r < rows; r++) {
            m(r, c) = normal(rng);
        }
    }
    return m;
}

// Haar-ish random unitary from the QR decomposition of a complex Ginibre matrix.
Eigen::MatrixXcd random_unitary(size_t n, std::mt19937_64 &rng) {
    auto k = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd z(k, k);
    Eigen::MatrixXd re = standard_normal(k, k, rng);
    Eigen::MatrixXd im = standard_normal(k, k, rng);
    z.real() = re;
    z.imag() = im;
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < k; j++) {
        std::complex<double> diag = r(j, j);
        if (std::abs(diag) > 0) {
            q.col(j) *= diag / std::abs(diag);
        }
    }
    return q;
}

// [[X, -Y], [Y, X]] in the block layout (p_1..p_n, q_1..q_n).
Eigen::MatrixXd orthogonal_symplectic_block(const Eigen::MatrixXcd &u) {
    auto k = u.rows();
    Eigen::MatrixXd o(2 * k, 2 * k);
    o.topLeftCorner(k, k) = u.real();
    o.topRightCorner(k, k) = -u.imag();
    o.bottomLeftCorner(k, k) = u.imag();
    o.bottomRightCorner(k, k) = u.real();
    return o;
}

}  // namespace

Eigen::MatrixXd symplectic_form_matrix(size_t n) {
    auto k = static_cast<Eigen::Index>(2 * n);
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; i += 2) {
        omega(i, i + 1) = 1;
        omega(i + 1, i) = -1;
    }
    return omega;
}

GaussianState::GaussianState(Eigen::VectorXd mu, Eigen::MatrixXd sigma, double sigma_vac)
    : n_(static_cast<size_t>(sigma.rows() / 2)), mu_(std::move(mu)), sigma_(std::move(sigma)), sigma_vac_(sigma_vac) {
    if (sigma_.rows() == 0 || sigma_.rows() != sigma_.cols() || sigma_.rows() % 2 != 0) {
        throw std::invalid_argument("covariance matrix must be square with even nonzero dimension");
    }
    if (n_ > 16) {
        throw std::invalid_argument("at most 16 modes are supported");
    }
    if (mu_.size() != sigma_.rows()) {
        throw std::invalid_argument("first-moment vector does not match the covariance dimension");
    }
    if (!(sigma_vac_ > 0)) {
        throw std::invalid_argument("vacuum variance must be positive");
    }
    if ((sigma_ - sigma_.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("covariance matrix is not symmetric");
    }
}

GaussianState GaussianState::vacuum(size_t n, double sigma_vac) {
    auto k = static_cast<Eigen::Index>(2 * n);
    return GaussianState(Eigen::VectorXd::Zero(k), sigma_vac * Eigen::MatrixXd::Identity(k, k), sigma_vac);
}

Eigen::MatrixXd GaussianState::wigner_covariance() const {
    return sigma_ * (0.5 / sigma_vac_);
}

Eigen::MatrixXd GaussianState::block(ParticleMask modes) const {
    check_modes(*this, modes);
    return principal(sigma_, coordinates(n_, modes));
}

Eigen::MatrixXd GaussianState::wigner_block(ParticleMask modes) const {
    return block(modes) * (0.5 / sigma_vac_);
}

Eigen::VectorXd GaussianState::wigner_mean(ParticleMask modes) const {
    check_modes(*this, modes);
    auto idx = coordinates(n_, modes);
    Eigen::VectorXd result(static_cast<Eigen::Index>(idx.size()));
    for (size_t k = 0; k < idx.size(); k++) {
        result(static_cast<Eigen::Index>(k)) = mu_(idx[k]);
    }
    return result;
}

Physicality is_physical(const GaussianState &g) {
    Eigen::MatrixXcd h = g.covariance().cast<std::complex<double>>();
    h += std::complex<double>(0, g.vacuum_variance()) * symplectic_form_matrix(g.n()).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    double margin = solver.eigenvalues().minCoeff();
    return {margin >= -kPhysicalityTolerance, margin};
}

double log_det_spd(const Eigen::MatrixXd &a) {
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success) {
        throw std::domain_error("covariance block is not positive definite");
    }
    double total = 0;
    const auto &l = llt.matrixLLT();
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        if (!(l(i, i) > 0)) {
            throw std::domain_error("covariance block is not positive definite");
        }
        total += 2 * std::log(l(i, i));
    }
    return total;
}

double renyi2_quantum(const GaussianState &g, ParticleMask modes) {
    return 0.5 * log_det_spd(g.wigner_block(modes)) + popcount(modes) * std::numbers::ln2;
}

double renyi_alpha_classical(const GaussianState &g, ParticleMask modes, double alpha) {
    if (!(alpha > 0) || alpha == 1) {
        throw std::invalid_argument("Renyi order must be positive and different from 1; use shannon_classical");
    }
    return 0.5 * log_det_spd(g.wigner_block(modes)) + popcount(modes) * (kLogTwoPi - std::log(alpha) / (1 - alpha));
}

double shannon_classical(const GaussianState &g, ParticleMask modes) {
    return 0.5 * log_det_spd(g.wigner_block(modes)) + popcount(modes) * (kLogTwoPi + 1);
}

double renyi2_from_classical(const GaussianState &g, ParticleMask modes, double alpha) {
    double shift = std::log(std::numbers::pi) - std::log(alpha) / (1 - alpha);
    return renyi_alpha_classical(g, modes, alpha) - popcount(modes) * shift;
}

namespace {

struct WignerSampler {
    Eigen::MatrixXd chol;
    Eigen::MatrixXd precision;
    double log_norm = 0;  // log of (2 pi)^k sqrt(det Sigma)

    WignerSampler(const GaussianState &g, ParticleMask modes) {
        Eigen::MatrixXd cov = g.wigner_block(modes);
        Eigen::LLT<Eigen::MatrixXd> llt(cov);
        if (llt.info() != Eigen::Success) {
            throw std::domain_error("degenerate covariance block; Monte-Carlo estimate undefined");
        }
        chol = llt.matrixL();
        // Density evaluated through an LU factorization, independent of the sampler.
        Eigen::FullPivLU<Eigen::MatrixXd> lu(cov);
        precision = lu.inverse();
        double det = lu.determinant();
        if (!(det > 0)) {
            throw std::domain_error("degenerate covariance block; Monte-Carlo estimate undefined");
        }
        log_norm = popcount(modes) * kLogTwoPi + 0.5 * std::log(det);
    }

    // Samples in the shard's range of the output vector.
    void fill(std::span<double> out, uint64_t seed, size_t shard) const {
        std::seed_seq seq{seed, static_cast<uint64_t>(shard)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> normal;
        Eigen::VectorXd z(chol.rows());
        for (double &w : out) {
            for (Eigen::Index k = 0; k < z.size(); k++) {
                z(k) = normal(rng);
            }
            Eigen::VectorXd x = chol * z;
            w = std::exp(-0.5 * x.dot(precision * x) - log_norm);
        }
    }
};

std::vector<size_t> shard_offsets(size_t samples) {
    std::vector<size_t> offsets(kMonteCarloShards + 1, 0);
    for (size_t s = 0; s < kMonteCarloShards; s++) {
        offsets[s + 1] = offsets[s] + samples / kMonteCarloShards + (s < samples % kMonteCarloShards ? 1 : 0);
    }
    return offsets;
}

MonteCarloEstimate jackknife(const std::vector<double> &w) {
    double n = static_cast<double>(w.size());
    double total = 0;
    for (double x : w) {
        total += x;
    }
    double mean_theta = 0;
    for (double x : w) {
        mean_theta += -std::log((total - x) / (n - 1));
    }
    mean_theta /= n;
    double spread = 0;
    for (double x : w) {
        double diff = -std::log((total - x) / (n - 1)) - mean_theta;
        spread += diff * diff;
    }
    return {-std::log(total / n), std::sqrt((n - 1) / n * spread), w.size()};
}

void check_samples(size_t samples) {
    if (samples < 10000) {
        throw std::invalid_argument("Monte-Carlo estimate needs at least 10^4 samples");
    }
}

}  // namespace

MonteCarloEstimate mc_renyi2(const GaussianState &g, ParticleMask modes, size_t samples, uint64_t seed) {
    check_samples(samples);
    WignerSampler sampler(g, modes);
    auto offsets = shard_offsets(samples);
    std::vector<double> w(samples);
    auto shards = static_cast<int64_t>(kMonteCarloShards);
#pragma omp parallel for schedule(static)
    for (int64_t s = 0; s < shards; s++) {
        auto su = static_cast<size_t>(s);
        sampler.fill(std::span<double>(w.data() + offsets[su], offsets[su + 1] - offsets[su]), seed, su);
    }
    return jackknife(w);
}

MonteCarloEstimate mc_renyi2_serial(const GaussianState &g, ParticleMask modes, size_t samples, uint64_t seed) {
    check_samples(samples);
    WignerSampler sampler(g, modes);
    auto offsets = shard_offsets(samples);
    std::vector<double> w(samples);
    for (size_t s = 0; s < kMonteCarloShards; s++) {
        sampler.fill(std::span<double>(w.data() + offsets[s], offsets[s + 1] - offsets[s]), seed, s);
    }
    return jackknife(w);
}

GaussianEntropyVector::GaussianEntropyVector(size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != (size_t{1} << n) - 1) {
        throw std::invalid_argument("Gaussian entropy vector needs 2^n - 1 entries");
    }
}

GaussianEntropyVector entropy_vector_gaussian(const GaussianState &g) {
    std::vector<double> entries;
    ParticleMask full = static_cast<ParticleMask>((uint64_t{1} << g.n()) - 1);
    for (ParticleMask mask = 1; mask <= full; mask++) {
        entries.push_back(renyi2_quantum(g, mask));
    }
    return GaussianEntropyVector(g.n(), std::move(entries));
}

Eigen::MatrixXd random_symplectic(size_t n, std::mt19937_64 &rng, double max_squeeze) {
    auto k = static_cast<Eigen::Index>(n);
    std::uniform_real_distribution<double> squeeze(-max_squeeze, max_squeeze);
    Eigen::MatrixXd z = Eigen::MatrixXd::Identity(2 * k, 2 * k);
    for (Eigen::Index i = 0; i < k; i++) {
        double r = squeeze(rng);
        z(i, i) = std::exp(r);
        z(k + i, k + i) = std::exp(-r);
    }
    Eigen::MatrixXd s_block =
        orthogonal_symplectic_block(random_unitary(n, rng)) * z * orthogonal_symplectic_block(random_unitary(n, rng));
    // Block layout (p_1..p_n, q_1..q_n) -> interleaved (p_1, q_1, ...).
    Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(2 * k, 2 * k);
    for (Eigen::Index i = 0; i < k; i++) {
        perm(2 * i, i) = 1;
        perm(2 * i + 1, k + i) = 1;
    }
    return perm * s_block * perm.transpose();
}

GaussianState random_physical_state(size_t n, std::mt19937_64 &rng, double sigma_vac) {
    auto k = static_cast<Eigen::Index>(n);
    std::uniform_real_distribution<double> excess(0.0, 2.0);
    std::bernoulli_distribution pure(0.25);
    Eigen::MatrixXd s = random_symplectic(n, rng, 1.0);
    Eigen::VectorXd nu(2 * k);
    bool is_pure = pure(rng);
    for (Eigen::Index i = 0; i < k; i++) {
        double factor = is_pure ? 1.0 : 1.0 + excess(rng);
        nu(2 * i) = nu(2 * i + 1) = sigma_vac * factor;
    }
    Eigen::MatrixXd sigma = s * nu.asDiagonal() * s.transpose();
    sigma = 0.5 * (sigma + sigma.transpose());
    Eigen::VectorXd mu = standard_normal(2 * k, 1, rng);
    return GaussianState(mu, sigma, sigma_vac);
}

GaussianState wishart_state(const Eigen::MatrixXd &g, double floor, double sigma_vac) {
    Eigen::MatrixXd sigma = sigma_vac * (1 + floor) * Eigen::MatrixXd::Identity(g.rows(), g.rows()) + g * g.transpose();
    sigma = 0.5 * (sigma + sigma.transpose());
    return GaussianState(Eigen::VectorXd::Zero(g.rows()), sigma, sigma_vac);
}

GaussianState gaussian_fixture(const std::string &name) {
    if (name == "vacuum") {
        return GaussianState::vacuum(1);
    }
    if (name == "thermal") {
        return GaussianState(Eigen::VectorXd::Zero(2), Eigen::MatrixXd::Identity(2, 2));
    }
    if (name == "correlated") {
        double c = std::cosh(0.6), s = std::sinh(0.6);
        Eigen::MatrixXd sigma(4, 4);
        sigma << c + 0.4, 0.1, -s, 0,
                 0.1, c + 0.4, 0, s,
                 -s, 0, c + 0.4, 0,
                 0, s, 0, c + 0.4;
        return GaussianState(Eigen::VectorXd::Zero(4), 0.5 * sigma);
    }
    throw std::invalid_argument("unknown Gaussian fixture '" + name + "' (expected vacuum, thermal or correlated)");
}

double gaussian_ingleton_value(const GaussianState &g) {
    if (g.n() != 4) {
        throw std::invalid_argument("the Gaussian Ingleton value is defined on 4 modes");
    }
    static const Inequality q = ingleton(4, 0b0001, 0b0010, 0b0100, 0b1000);
    double total = 0;
    for (auto [mask, c] : q.coefficients()) {
        total += static_cast<double>(c) * renyi2_quantum(g, mask);
    }
    return total;
}

const char *to_string(SearchStrategy s) {
    switch (s) {
        case SearchStrategy::random_wishart:
            return "random-wishart";
        case SearchStrategy::random_pure_plus_noise:
            return "random-pure-plus-noise";
        case SearchStrategy::local_perturbation:
            return "local-perturbation";
    }
    return "unknown";
}

SearchStrategy parse_strategy(const std::string &name) {
    for (auto s : {SearchStrategy::random_wishart, SearchStrategy::random_pure_plus_noise,
                   SearchStrategy::local_perturbation}) {
        if (name == to_string(s)) {
            return s;
        }
    }
    throw std::invalid_argument(
        "unknown search strategy '" + name + "' (expected random-wishart, random-pure-plus-noise or local-perturbation)");
}

namespace {

constexpr double kSearchFloor = 1e-3;
constexpr double kPureNoise = 1e-3;
constexpr size_t kModes = 4;

struct Candidate {
    Eigen::MatrixXd sigma;
    double value = std::numeric_limits<double>::infinity();
};

double evaluate_candidate(const Eigen::MatrixXd &sigma) {
    try {
        return gaussian_ingleton_value(GaussianState(Eigen::VectorXd::Zero(sigma.rows()), sigma, 0.5));
    } catch (const std::domain_error &) {
        return std::numeric_limits<double>::infinity();
    }
}

Eigen::MatrixXd pure_plus_noise(std::mt19937_64 &rng) {
    Eigen::MatrixXd s = random_symplectic(kModes, rng, 1.5);
    Eigen::MatrixXd sigma = 0.5 * (s * s.transpose() + kPureNoise * Eigen::MatrixXd::Identity(8, 8));
    return 0.5 * (sigma + sigma.transpose());
}

Candidate search_shard(uint64_t seed, size_t shard, size_t iterations, SearchStrategy strategy) {
    std::seed_seq seq{seed, static_cast<uint64_t>(shard)};
    std::mt19937_64 rng(seq);
    Candidate best;
    auto consider = [&](const Eigen::MatrixXd &sigma, double value) {
        if (value < best.value) {
            best.sigma = sigma;
            best.value = value;
        }
    };

    if (strategy != SearchStrategy::local_perturbation) {
        for (size_t it = 0; it < iterations; it++) {
            Eigen::MatrixXd sigma = strategy == SearchStrategy::random_wishart
                                        ? wishart_state(standard_normal(8, 8, rng), kSearchFloor).covariance()
                                        : pure_plus_noise(rng);
            consider(sigma, evaluate_candidate(sigma));
        }
        return best;
    }

    // Hill descent on the Wishart factor with random restarts.
    constexpr size_t kStallLimit = 2000;
    Eigen::MatrixXd factor = standard_normal(8, 8, rng);
    Eigen::MatrixXd sigma = wishart_state(factor, kSearchFloor).covariance();
    double current = evaluate_candidate(sigma);
    consider(sigma, current);
    double step = 0.3;
    size_t stall = 0;
    for (size_t it = 1; it < iterations; it++) {
        if (stall > kStallLimit) {
            factor = standard_normal(8, 8, rng);
            sigma = wishart_state(factor, kSearchFloor).covariance();
            current = evaluate_candidate(sigma);
            consider(sigma, current);
            step = 0.3;
            stall = 0;
            continue;
        }
        Eigen::MatrixXd trial = factor + step * standard_normal(8, 8, rng);
        Eigen::MatrixXd trial_sigma = wishart_state(trial, kSearchFloor).covariance();
        double value = evaluate_candidate(trial_sigma);
        if (value < current) {
            factor = std::move(trial);
            current = value;
            consider(trial_sigma, value);
            stall = 0;
        } else {
            stall++;
            step = std::max(step * 0.999, 1e-3);
        }
    }
    return best;
}

}  // namespace

IngletonSearchResult ingleton_search(uint64_t seed, size_t iterations, SearchStrategy strategy, size_t shards) {
    if (shards == 0) {
        throw std::invalid_argument("search needs at least one shard");
    }
    std::vector<Candidate> results(shards);
    auto count = static_cast<int64_t>(shards);
#pragma omp parallel for schedule(dynamic)
    for (int64_t s = 0; s < count; s++) {
        auto su = static_cast<size_t>(s);
        size_t budget = iterations / shards + (su < iterations % shards ? 1 : 0);
        results[su] = search_shard(seed, su, budget, strategy);
    }
    IngletonSearchResult out;
    out.seed = seed;
    out.iterations = iterations;
    out.strategy = strategy;
    const Candidate *best = nullptr;
    for (const auto &c : results) {
        if (c.sigma.size() != 0 && (best == nullptr || c.value < best->value)) {
            best = &c;
        }
    }
    if (best == nullptr) {
        return out;
    }
    out.sigma = best->sigma;
    out.value = best->value;
    out.margin = is_physical(GaussianState(Eigen::VectorXd::Zero(8), best->sigma, 0.5)).margin;
    out.found = out.value < kIngletonViolationThreshold && out.margin > kIngletonMarginThreshold;
    return out;
}

}  // namespace stabent
