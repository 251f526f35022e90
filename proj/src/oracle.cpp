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

#include "stabent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace stabent {

namespace {

using Complex = std::complex<double>;

// e^{i pi k / d}, with k reduced modulo 2d first.
Complex half_root(int64_t k, int64_t d) {
    double angle = std::numbers::pi * static_cast<double>(mod_floor(k, 2 * d)) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

int64_t hilbert_dim(const PhaseSpace &ps) {
    int64_t dim = 1;
    for (size_t i = 0; i < ps.n(); i++) {
        dim *= ps.d();
        if (dim > kDenseLimit) {
            throw std::length_error(
                "dense oracle needs d^n <= " + std::to_string(kDenseLimit) + "; d=" + std::to_string(ps.d()) +
                " n=" + std::to_string(ps.n()) + " is too large");
        }
    }
    return dim;
}

double max_abs(const DenseOperator &a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

// Index tables splitting a tensor index into (kept particles, traced particles).
struct TensorSplit {
    int64_t kept_dim = 1;
    int64_t traced_dim = 1;
    std::vector<int64_t> full_index;  // [kept * traced_dim + traced] -> full index
};

TensorSplit split_tensor(const PhaseSpace &ps, ParticleMask keep) {
    TensorSplit split;
    size_t n = ps.n();
    int64_t d = ps.d();
    for (size_t i = 0; i < n; i++) {
        (keep >> i & 1 ? split.kept_dim : split.traced_dim) *= d;
    }
    int64_t full_dim = split.kept_dim * split.traced_dim;
    split.full_index.assign(static_cast<size_t>(full_dim), 0);
    for (int64_t x = 0; x < full_dim; x++) {
        // Particle 1 is the most significant digit of x.
        int64_t kept = 0, traced = 0, rest = x;
        std::vector<int64_t> digits(n);
        for (size_t i = n; i-- > 0;) {
            digits[i] = rest % d;
            rest /= d;
        }
        for (size_t i = 0; i < n; i++) {
            if (keep >> i & 1) {
                kept = kept * d + digits[i];
            } else {
                traced = traced * d + digits[i];
            }
        }
        split.full_index[static_cast<size_t>(kept * split.traced_dim + traced)] = x;
    }
    return split;
}

}  // namespace

DenseOperator weyl(int64_t d, int64_t p, int64_t q) {
    if (d < 2) {
        throw std::invalid_argument("local dimension must be at least 2");
    }
    DenseOperator w = DenseOperator::Zero(d, d);
    for (int64_t x = 0; x < d; x++) {
        w(x, mod_floor(x - q, d)) = half_root(2 * p * x - p * q, d);
    }
    return w;
}

DenseOperator weyl_n(const PhaseSpace &ps, std::span<const int64_t> v) {
    if (v.size() != ps.rank()) {
        throw std::invalid_argument("Weyl label has the wrong length");
    }
    int64_t dim = hilbert_dim(ps);
    int64_t d = ps.d();
    size_t n = ps.n();
    DenseOperator w = DenseOperator::Zero(dim, dim);
    std::vector<int64_t> digits(n);
    for (int64_t x = 0; x < dim; x++) {
        int64_t rest = x;
        for (size_t i = n; i-- > 0;) {
            digits[i] = rest % d;
            rest /= d;
        }
        int64_t col = 0;
        int64_t exponent = 0;
        for (size_t i = 0; i < n; i++) {
            int64_t p = v[2 * i], q = v[2 * i + 1];
            exponent += 2 * p * digits[i] - p * q;
            col = col * d + mod_floor(digits[i] - q, d);
        }
        w(x, col) = half_root(exponent, d);
    }
    return w;
}

IntVec even_lift(std::span<const int64_t> v, int64_t d) {
    if (d % 2 == 0) {
        throw std::invalid_argument("even lifts only exist for odd d");
    }
    IntVec result(v.size());
    for (size_t k = 0; k < v.size(); k++) {
        int64_t r = mod_floor(v[k], d);
        result[k] = r % 2 == 0 ? r : r + d;
    }
    return result;
}

DenseOperator stabilizer_projector(const StabilizerState &st) {
    const auto &ps = st.phase_space();
    const auto &m = st.subgroup();
    int64_t dim = hilbert_dim(ps);
    int64_t d = ps.d();
    double order = m.order().convert_to<double>();
    if (d % 2 == 1) {
        DenseOperator sum = DenseOperator::Zero(dim, dim);
        for (const auto &elem : m.elements()) {
            sum += weyl_n(ps, even_lift(elem, d));
        }
        return sum / order;
    }
    // Basis rows g_j satisfy o_j g_j = sum_{k>j} c_k g_k with o_j = d / pivot_j.
    // Rescale each w(g_j) so the same relation holds between the operators;
    // the ordered power sums then average a faithful representation of M.
    size_t rank = m.ambient_rank();
    std::vector<DenseOperator> gens(rank);
    std::vector<DenseOperator> sums(rank);
    for (size_t j = rank; j-- > 0;) {
        int64_t cyclic_order = d / m.pivot(j);
        if (cyclic_order == 1) {
            continue;
        }
        auto row = m.basis_row(j);
        IntVec rest(rank);
        for (size_t c = 0; c < rank; c++) {
            rest[c] = mod_floor(cyclic_order * row[c], d);
        }
        DenseOperator target = DenseOperator::Identity(dim, dim);
        for (size_t k = j + 1; k < rank; k++) {
            if (rest[k] == 0) {
                continue;
            }
            int64_t c = rest[k] / m.pivot(k);
            auto gk = m.basis_row(k);
            for (size_t col = k; col < rank; col++) {
                rest[col] = mod_floor(rest[col] - c * gk[col], d);
            }
            for (int64_t x = 0; x < c; x++) {
                target = target * gens[k];
            }
        }
        DenseOperator w = weyl_n(ps, IntVec(row.begin(), row.end()));
        DenseOperator power = DenseOperator::Identity(dim, dim);
        for (int64_t x = 0; x < cyclic_order; x++) {
            power = power * w;
        }
        // Both sides are the same monomial matrix up to a scalar.
        Eigen::Index r = 0, c = 0;
        power.cwiseAbs().maxCoeff(&r, &c);
        Complex ratio = target(r, c) / power(r, c);
        w *= std::pow(ratio, 1.0 / static_cast<double>(cyclic_order));
        gens[j] = w;
        DenseOperator geometric = DenseOperator::Identity(dim, dim);
        power = DenseOperator::Identity(dim, dim);
        for (int64_t x = 1; x < cyclic_order; x++) {
            power = power * w;
            geometric += power;
        }
        sums[j] = geometric;
    }
    DenseOperator product = DenseOperator::Identity(dim, dim);
    for (size_t j = 0; j < rank; j++) {
        if (sums[j].size() > 0) {
            product = product * sums[j];
        }
    }
    return product / order;
}

DenseOperator stabilizer_density(const StabilizerState &st) {
    DenseOperator p = stabilizer_projector(st);
    return p / p.trace().real();
}

DenseOperator reduced_state(const DenseOperator &rho, const PhaseSpace &ps, ParticleMask keep) {
    int64_t dim = hilbert_dim(ps);
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument(
            "operator is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
            ", expected dimension " + std::to_string(dim));
    }
    if (keep == 0 || (keep & ~ps.full_mask()) != 0) {
        throw std::invalid_argument("invalid particle subset for partial trace");
    }
    auto split = split_tensor(ps, keep);
    DenseOperator result = DenseOperator::Zero(split.kept_dim, split.kept_dim);
    for (int64_t a = 0; a < split.kept_dim; a++) {
        for (int64_t b = 0; b < split.kept_dim; b++) {
            Complex total = 0;
            for (int64_t c = 0; c < split.traced_dim; c++) {
                total += rho(split.full_index[static_cast<size_t>(a * split.traced_dim + c)],
                             split.full_index[static_cast<size_t>(b * split.traced_dim + c)]);
            }
            result(a, b) = total;
        }
    }
    return result;
}

double spectral_entropy(const DenseOperator &rho, std::optional<double> alpha, double base) {
    if (rho.rows() != rho.cols() || rho.rows() == 0) {
        throw std::invalid_argument("density matrix must be square and nonempty");
    }
    if (max_abs(rho - rho.adjoint()) > kSpectralTolerance) {
        throw std::domain_error("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1.0)) > kSpectralTolerance) {
        throw std::domain_error("density matrix does not have unit trace");
    }
    if (alpha && (*alpha <= 0 || *alpha == 1)) {
        throw std::invalid_argument("Renyi order must be positive and different from 1");
    }
    Eigen::SelfAdjointEigenSolver<DenseOperator> solver(rho, Eigen::EigenvaluesOnly);
    const auto &eigenvalues = solver.eigenvalues();
    if (eigenvalues.minCoeff() < -kSpectralTolerance) {
        throw std::domain_error("density matrix is not positive semidefinite");
    }
    // Eigenvalues below the noise floor are zeros of the exact spectrum.
    constexpr double floor = 1e-12;
    double log_base = std::log(base);
    if (!alpha) {
        double h = 0;
        for (double lambda : eigenvalues) {
            if (lambda > 0) {
                h -= lambda * std::log(lambda);
            }
        }
        return h / log_base;
    }
    double power_sum = 0;
    for (double lambda : eigenvalues) {
        if (lambda > floor) {
            power_sum += std::pow(lambda, *alpha);
        }
    }
    return std::log(power_sum) / (1 - *alpha) / log_base;
}

bool equal_up_to_weyl_conjugation(
    const DenseOperator &rho, const DenseOperator &sigma, const PhaseSpace &ps, double tolerance) {
    Subgroup everything = Subgroup::full(ps.rank(), ps.d());
    for (const auto &a : everything.elements()) {
        DenseOperator w = weyl_n(ps, a);
        if (max_abs(rho - w * sigma * w.adjoint()) <= tolerance) {
            return true;
        }
    }
    return false;
}

WignerTable::WignerTable(PhaseSpace ps, std::vector<double> values) : ps_(ps), values_(std::move(values)) {
    size_t expected = 1;
    for (size_t k = 0; k < ps_.rank(); k++) {
        expected *= static_cast<size_t>(ps_.d());
    }
    if (values_.size() != expected) {
        throw std::invalid_argument("Wigner table has the wrong number of points");
    }
}

size_t WignerTable::index_of(std::span<const int64_t> point) const {
    if (point.size() != ps_.rank()) {
        throw std::invalid_argument("phase-space point has the wrong length");
    }
    size_t index = 0;
    for (int64_t x : point) {
        index = index * static_cast<size_t>(ps_.d()) + static_cast<size_t>(mod_floor(x, ps_.d()));
    }
    return index;
}

IntVec WignerTable::point_of(size_t index) const {
    IntVec point(ps_.rank());
    for (size_t k = ps_.rank(); k-- > 0;) {
        point[k] = static_cast<int64_t>(index % static_cast<size_t>(ps_.d()));
        index /= static_cast<size_t>(ps_.d());
    }
    return point;
}

double WignerTable::at(std::span<const int64_t> point) const {
    return values_[index_of(point)];
}

double WignerTable::total() const {
    double total = 0;
    for (double v : values_) {
        total += v;
    }
    return total;
}

WignerTable wigner(const DenseOperator &rho, const PhaseSpace &ps) {
    int64_t d = ps.d();
    if (d % 2 == 0) {
        throw std::domain_error("the discrete Wigner function is only built for odd d");
    }
    int64_t dim = hilbert_dim(ps);
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("operator dimension does not match the phase space");
    }
    auto points = Subgroup::full(ps.rank(), d).elements();
    std::sort(points.begin(), points.end());

    // Characteristic function tr(w(b)^dagger rho) on the even lifts.
    std::vector<IntVec> lifts;
    std::vector<Complex> characteristic;
    lifts.reserve(points.size());
    characteristic.reserve(points.size());
    for (const auto &b : points) {
        lifts.push_back(even_lift(b, d));
        characteristic.push_back(weyl_n(ps, lifts.back()).conjugate().cwiseProduct(rho).sum());
    }

    double norm = 1.0;
    for (size_t k = 0; k < ps.rank(); k++) {
        norm /= static_cast<double>(d);
    }
    std::vector<double> values(points.size());
    for (size_t i = 0; i < points.size(); i++) {
        Complex total = 0;
        for (size_t j = 0; j < points.size(); j++) {
            total += half_root(-symplectic_form_raw(points[i], lifts[j]), d) * characteristic[j];
        }
        values[i] = total.real() * norm;
    }
    return WignerTable(ps, std::move(values));
}

WignerTable wigner_marginal(const WignerTable &w, ParticleMask keep) {
    const auto &ps = w.phase_space();
    PhaseSpace sub = ps.sub_space(keep);
    auto coords = ps.coords(keep);
    WignerTable shape(sub, std::vector<double>(Subgroup::full(sub.rank(), sub.d()).order_u64(), 0.0));
    std::vector<double> values = shape.values();
    IntVec sub_point(sub.rank());
    for (size_t i = 0; i < w.values().size(); i++) {
        IntVec point = w.point_of(i);
        for (size_t k = 0; k < coords.size(); k++) {
            sub_point[k] = point[coords[k]];
        }
        values[shape.index_of(sub_point)] += w.values()[i];
    }
    return WignerTable(sub, std::move(values));
}

void OracleDeviation::merge(const OracleDeviation &other) {
    projector_idempotent = std::max(projector_idempotent, other.projector_idempotent);
    projector_hermitian = std::max(projector_hermitian, other.projector_hermitian);
    projector_trace = std::max(projector_trace, other.projector_trace);
    reduction = std::max(reduction, other.reduction);
    von_neumann = std::max(von_neumann, other.von_neumann);
    renyi = std::max(renyi, other.renyi);
    wigner_uniform = std::max(wigner_uniform, other.wigner_uniform);
    wigner_marginal = std::max(wigner_marginal, other.wigner_marginal);
    reduction_up_to_weyl = reduction_up_to_weyl && other.reduction_up_to_weyl;
    phase_space_identity = phase_space_identity && other.phase_space_identity;
}

bool within(const OracleDeviation &dev, const OracleTolerances &tol) {
    return dev.projector_idempotent <= tol.structural && dev.projector_hermitian <= tol.structural &&
           dev.projector_trace <= tol.structural && dev.reduction <= tol.structural &&
           dev.von_neumann <= tol.spectral && dev.renyi <= tol.spectral && dev.wigner_uniform <= tol.wigner &&
           dev.wigner_marginal <= tol.wigner && dev.reduction_up_to_weyl && dev.phase_space_identity;
}

OracleDeviation compare_with_oracle(const StabilizerState &st) {
    const auto &ps = st.phase_space();
    int64_t d = ps.d();
    OracleDeviation dev;

    DenseOperator p = stabilizer_projector(st);
    double expected_trace = static_cast<double>(hilbert_dim(ps)) / st.subgroup().order().convert_to<double>();
    dev.projector_idempotent = max_abs(p * p - p);
    dev.projector_hermitian = max_abs(p - p.adjoint());
    dev.projector_trace = std::abs(p.trace() - Complex(expected_trace));
    dev.phase_space_identity = phase_space_identity_holds(st);

    DenseOperator rho = p / p.trace().real();
    bool odd = d % 2 == 1;
    std::optional<WignerTable> w;
    if (odd) {
        w = wigner(rho, ps);
        double perp_order = st.complement().order().convert_to<double>();
        double worst = 0;
        for (size_t i = 0; i < w->values().size(); i++) {
            double expected = st.complement().contains(w->point_of(i)) ? 1.0 / perp_order : 0.0;
            worst = std::max(worst, std::abs(w->values()[i] - expected));
        }
        dev.wigner_uniform = worst;
        dev.wigner_marginal = 0;
    }

    for (ParticleMask mask = 1; mask <= ps.full_mask(); mask++) {
        PhaseSpace sub = ps.sub_space(mask);
        DenseOperator reduced = reduced_state(rho, ps, mask);
        DenseOperator target = stabilizer_density(StabilizerState(sub, restrict_to(ps, st.subgroup(), mask)));
        double diff = max_abs(reduced - target);
        if (!odd && diff > kStructuralTolerance) {
            // Even d: the basis-ordered product fixes the signs of M_I only up
            // to a character, i.e. up to conjugation by a local Weyl operator.
            dev.reduction_up_to_weyl =
                dev.reduction_up_to_weyl && equal_up_to_weyl_conjugation(reduced, target, sub, kStructuralTolerance);
        } else {
            dev.reduction = std::max(dev.reduction, diff);
        }

        double formula = quantum_entropy(st, mask).value();
        double vn = spectral_entropy(reduced, std::nullopt, static_cast<double>(d));
        dev.von_neumann = std::max(dev.von_neumann, std::abs(vn - formula));
        for (double alpha : {0.5, 2.0, 3.0}) {
            double s = spectral_entropy(reduced, alpha, static_cast<double>(d));
            dev.renyi = std::max({dev.renyi, std::abs(s - formula), std::abs(s - vn)});
        }

        if (odd) {
            auto marginal = wigner_marginal(*w, mask);
            auto direct = wigner(reduced, sub);
            for (size_t i = 0; i < marginal.values().size(); i++) {
                dev.wigner_marginal =
                    std::max(dev.wigner_marginal, std::abs(marginal.values()[i] - direct.values()[i]));
            }
        }
    }
    return dev;
}

OracleDeviation compare_corpus_with_oracle(const std::vector<StabilizerState> &corpus) {
    std::vector<OracleDeviation> per_state(corpus.size());
    auto count = static_cast<int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < count; i++) {
        per_state[static_cast<size_t>(i)] = compare_with_oracle(corpus[static_cast<size_t>(i)]);
    }
    OracleDeviation merged;
    for (const auto &dev : per_state) {
        merged.merge(dev);
    }
    return merged;
}

OracleDeviation compare_corpus_with_oracle_serial(const std::vector<StabilizerState> &corpus) {
    OracleDeviation merged;
    for (const auto &st : corpus) {
        merged.merge(compare_with_oracle(st));
    }
    return merged;
}

}  // namespace stabent
