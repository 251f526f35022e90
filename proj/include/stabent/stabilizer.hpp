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
#include <vector>

#include "stabent/phasespace.hpp"
#include "stabent/zmod.hpp"

namespace stabent {

enum class EntropyKind {
    /// S(rho(M)_I), von Neumann (equivalently any Renyi order).
    quantum,
    /// H(X_I) of the uniform distribution on M^perp.
    classical,
};

const char *to_string(EntropyKind kind);

/// An entropy in units of log d, kept as an exact subgroup order.
///
/// quantum:   |I| - log_d(order), order = |M_I|
/// classical: log_d(order),       order = |pi_I(M^perp)|
///
/// Both are log_d(numerator / denominator) for the integers returned below,
/// which is what exact inequality evaluation works with.
struct ExactEntropy {
    int subset_size = 0;
    BigInt subgroup_order = 1;
    int64_t d = 2;
    EntropyKind kind = EntropyKind::quantum;

    BigInt numerator() const;
    BigInt denominator() const;
    /// Decimal rendering. Only approximate when d is not a prime power.
    double value() const;

    bool operator==(const ExactEntropy &) const = default;
};

/// Entropies for every nonempty subset, indexed by mask - 1 (ascending mask).
class EntropyVector {
   public:
    EntropyVector(size_t n, int64_t d, EntropyKind kind, std::vector<ExactEntropy> entries);

    size_t n() const { return n_; }
    int64_t d() const { return d_; }
    EntropyKind kind() const { return kind_; }
    const ExactEntropy &at(ParticleMask mask) const;
    const std::vector<ExactEntropy> &entries() const { return entries_; }
    std::vector<double> values() const;

    bool operator==(const EntropyVector &) const = default;

   private:
    size_t n_;
    int64_t d_;
    EntropyKind kind_;
    std::vector<ExactEntropy> entries_;
};

/// rho(M) for an isotropic M, described only by its phase-space data.
class StabilizerState {
   public:
    /// Throws std::invalid_argument if M is not isotropic.
    StabilizerState(PhaseSpace ps, Subgroup m);

    const PhaseSpace &phase_space() const { return ps_; }
    const Subgroup &subgroup() const { return m_; }
    const Subgroup &complement() const { return perp_; }

   private:
    PhaseSpace ps_;
    Subgroup m_;
    Subgroup perp_;
};

ExactEntropy quantum_entropy(const StabilizerState &st, ParticleMask particles);
ExactEntropy classical_entropy(const StabilizerState &st, ParticleMask particles);

/// |pi_I(M^perp)| * |M_I| == d^{2|I|} for every nonempty I, i.e. the quantum
/// entropy equals the classical one minus |I|. Exact.
bool phase_space_identity_holds(const StabilizerState &st);

EntropyVector entropy_vector(const StabilizerState &st, EntropyKind kind);

/// Largest d^{2n} for which exhaustive enumeration is attempted.
inline constexpr uint64_t kEnumerationLimit = uint64_t{1} << 24;

/// Every isotropic subgroup of the phase space exactly once, sorted by
/// canonical basis. With `max_log_order` set, only subgroups of order at most
/// d^max_log_order are produced. Frontier expansion runs under OpenMP.
std::vector<StabilizerState> enumerate_isotropic(const PhaseSpace &ps, std::optional<unsigned> max_log_order = {});

/// Single-threaded depth-first reference for enumerate_isotropic.
std::vector<StabilizerState> enumerate_isotropic_serial(
    const PhaseSpace &ps, std::optional<unsigned> max_log_order = {});

}  // namespace stabent
