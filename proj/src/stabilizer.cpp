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

#include "stabent/stabilizer.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stabent {

const char *to_string(EntropyKind kind) {
    return kind == EntropyKind::quantum ? "quantum" : "classical";
}

BigInt ExactEntropy::numerator() const {
    return kind == EntropyKind::quantum ? big_pow(d, static_cast<uint64_t>(subset_size)) : subgroup_order;
}

BigInt ExactEntropy::denominator() const {
    return kind == EntropyKind::quantum ? subgroup_order : BigInt(1);
}

double ExactEntropy::value() const {
    double log_order = std::log(subgroup_order.convert_to<double>()) / std::log(static_cast<double>(d));
    return kind == EntropyKind::quantum ? subset_size - log_order : log_order;
}

EntropyVector::EntropyVector(size_t n, int64_t d, EntropyKind kind, std::vector<ExactEntropy> entries)
    : n_(n), d_(d), kind_(kind), entries_(std::move(entries)) {
    if (entries_.size() != (size_t{1} << n) - 1) {
        throw std::invalid_argument("entropy vector needs 2^n - 1 entries");
    }
}

const ExactEntropy &EntropyVector::at(ParticleMask mask) const {
    if (mask == 0 || mask > entries_.size()) {
        throw std::out_of_range("no entropy for subset mask " + std::to_string(mask));
    }
    return entries_[mask - 1];
}

std::vector<double> EntropyVector::values() const {
    std::vector<double> result;
    result.reserve(entries_.size());
    for (const auto &e : entries_) {
        result.push_back(e.value());
    }
    return result;
}

StabilizerState::StabilizerState(PhaseSpace ps, Subgroup m)
    : ps_(ps), m_(std::move(m)), perp_(symplectic_complement(ps_, m_)) {
    if (!is_isotropic(ps_, m_)) {
        throw std::invalid_argument("stabilizer subgroup is not isotropic");
    }
}

ExactEntropy quantum_entropy(const StabilizerState &st, ParticleMask particles) {
    const auto &ps = st.phase_space();
    return {popcount(particles), restrict_to(ps, st.subgroup(), particles).order(), ps.d(), EntropyKind::quantum};
}

ExactEntropy classical_entropy(const StabilizerState &st, ParticleMask particles) {
    const auto &ps = st.phase_space();
    return {
        popcount(particles), project_phase(ps, st.complement(), particles).order(), ps.d(), EntropyKind::classical};
}

bool phase_space_identity_holds(const StabilizerState &st) {
    const auto &ps = st.phase_space();
    for (ParticleMask mask = 1; mask <= ps.full_mask(); mask++) {
        BigInt lhs = project_phase(ps, st.complement(), mask).order() * restrict_to(ps, st.subgroup(), mask).order();
        if (lhs != big_pow(ps.d(), 2 * static_cast<uint64_t>(popcount(mask)))) {
            return false;
        }
    }
    return true;
}

EntropyVector entropy_vector(const StabilizerState &st, EntropyKind kind) {
    const auto &ps = st.phase_space();
    std::vector<ExactEntropy> entries;
    entries.reserve(ps.full_mask());
    for (ParticleMask mask = 1; mask <= ps.full_mask(); mask++) {
        entries.push_back(kind == EntropyKind::quantum ? quantum_entropy(st, mask) : classical_entropy(st, mask));
    }
    return EntropyVector(ps.n(), ps.d(), kind, std::move(entries));
}

namespace {

void check_enumeration_guard(const PhaseSpace &ps) {
    if (big_pow(ps.d(), ps.rank()) > BigInt(kEnumerationLimit)) {
        throw std::length_error(
            "exhaustive enumeration needs d^(2n) <= 2^24; d=" + std::to_string(ps.d()) +
            " n=" + std::to_string(ps.n()) + " is too large");
    }
}

BigInt order_bound(const PhaseSpace &ps, std::optional<unsigned> max_log_order) {
    return big_pow(ps.d(), max_log_order.value_or(static_cast<unsigned>(ps.rank())));
}

// Isotropic subgroups M + <v> for v in M^perp \ M. Every such extension is
// isotropic because [v, v] = 0 and v pairs trivially with M.
std::vector<Subgroup> isotropic_extensions(const PhaseSpace &ps, const Subgroup &m, const BigInt &bound) {
    std::vector<Subgroup> result;
    auto gens = m.generators();
    gens.emplace_back();
    for (auto &v : symplectic_complement(ps, m).elements()) {
        if (m.contains(v)) {
            continue;
        }
        gens.back() = std::move(v);
        auto ext = Subgroup::from_generators(gens, ps.rank(), ps.d());
        if (ext.order() <= bound) {
            result.push_back(std::move(ext));
        }
    }
    return result;
}

std::vector<StabilizerState> to_states(const PhaseSpace &ps, std::vector<Subgroup> subgroups) {
    std::sort(subgroups.begin(), subgroups.end());
    std::vector<StabilizerState> result;
    result.reserve(subgroups.size());
    for (auto &s : subgroups) {
        result.emplace_back(ps, std::move(s));
    }
    return result;
}

}  // namespace

std::vector<StabilizerState> enumerate_isotropic(const PhaseSpace &ps, std::optional<unsigned> max_log_order) {
    check_enumeration_guard(ps);
    BigInt bound = order_bound(ps, max_log_order);
    std::unordered_set<Subgroup, SubgroupHash> seen{Subgroup::trivial(ps.rank(), ps.d())};
    std::vector<Subgroup> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<std::vector<Subgroup>> children(frontier.size());
        auto count = static_cast<int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic)
        for (int64_t i = 0; i < count; i++) {
            children[static_cast<size_t>(i)] = isotropic_extensions(ps, frontier[static_cast<size_t>(i)], bound);
        }
        std::vector<Subgroup> next;
        for (auto &batch : children) {
            for (auto &s : batch) {
                if (seen.insert(s).second) {
                    next.push_back(std::move(s));
                }
            }
        }
        frontier = std::move(next);
    }
    return to_states(ps, std::vector<Subgroup>(seen.begin(), seen.end()));
}

std::vector<StabilizerState> enumerate_isotropic_serial(const PhaseSpace &ps, std::optional<unsigned> max_log_order) {
    check_enumeration_guard(ps);
    BigInt bound = order_bound(ps, max_log_order);
    std::set<Subgroup> seen;
    std::vector<Subgroup> stack{Subgroup::trivial(ps.rank(), ps.d())};
    seen.insert(stack.back());
    while (!stack.empty()) {
        Subgroup m = std::move(stack.back());
        stack.pop_back();
        for (auto &ext : isotropic_extensions(ps, m, bound)) {
            if (seen.insert(ext).second) {
                stack.push_back(std::move(ext));
            }
        }
    }
    return to_states(ps, std::vector<Subgroup>(seen.begin(), seen.end()));
}

}  // namespace stabent
