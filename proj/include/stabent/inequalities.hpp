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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "stabent/phasespace.hpp"
#include "stabent/stabilizer.hpp"
#include "stabent/zmod.hpp"

namespace stabent {

/// Linear entropy inequality sum_I nu_I H(I) >= 0 over nonempty subsets I.
class Inequality {
   public:
    /// Zero coefficients are dropped; throws if none remain or a mask is out of range.
    Inequality(size_t n, std::string name, const std::map<ParticleMask, int64_t> &nu);

    size_t n() const { return n_; }
    const std::string &name() const { return name_; }
    const std::map<ParticleMask, int64_t> &coefficients() const { return nu_; }
    int64_t coefficient(ParticleMask mask) const;

    bool operator==(const Inequality &) const = default;

   private:
    size_t n_;
    std::string name_;
    std::map<ParticleMask, int64_t> nu_;
};

/// sum_{I containing i} nu_I for each particle i (index i-1).
std::vector<int64_t> particle_sums(const Inequality &q);

/// Every particle sum is zero.
bool is_balanced(const Inequality &q);

/// Exact decision of sum_I nu_I log_d(num_I / den_I) >= 0 as the integer
/// comparison lhs >= rhs, where lhs collects num_I^nu_I (nu_I > 0) and
/// den_I^-nu_I (nu_I < 0) and rhs the reciprocal factors.
struct ExactEvaluation {
    bool holds = true;
    BigInt lhs = 1;
    BigInt rhs = 1;
    /// Decimal value of the left-hand side, diagnostic only.
    double slack = 0;
};

ExactEvaluation evaluate_exact(const Inequality &q, const EntropyVector &h);

/// sum_I nu_I values[I - 1] for real-valued entropy vectors.
double evaluate_real(const Inequality &q, std::span<const double> values);

// Builders. Subsets are particle masks; each expands the (conditional)
// mutual informations I(A:B) = H(A)+H(B)-H(AB), I(A:B|C) = H(AC)+H(BC)-H(C)-H(ABC).

/// H(I u J) - H(I).
Inequality monotonicity(size_t n, ParticleMask i, ParticleMask j);
/// H(I) + H(J) - H(I n J) - H(I u J); neither subset may contain the other.
Inequality strong_subadditivity(size_t n, ParticleMask i, ParticleMask j);
/// H(I u K) + H(J u K) - H(I) - H(J); I, J, K pairwise disjoint.
Inequality weak_monotonicity(size_t n, ParticleMask i, ParticleMask j, ParticleMask k);
/// I(I:J|K) + I(I:J|L) + I(K:L) - I(I:J); subsets pairwise disjoint.
Inequality ingleton(size_t n, ParticleMask i, ParticleMask j, ParticleMask k, ParticleMask l);
/// Zhang-Yeung non-Shannon inequality
///   I(A:B) + I(A:CD) + 3 I(C:D|A) + I(C:D|B) - 2 I(C:D) >= 0;
/// subsets pairwise disjoint.
Inequality zhang_yeung(size_t n, ParticleMask a, ParticleMask b, ParticleMask c, ParticleMask d);

enum class Family {
    monotonicity,
    strong_subadditivity,
    weak_monotonicity,
    ingleton,
    zhang_yeung,
};

const char *to_string(Family family);
Family parse_family(const std::string &name);

/// All instances of a family on n parties, up to the family's own symmetries:
/// monotonicity over all pairs I ⊊ U; SSA over unordered incomparable pairs;
/// weak monotonicity over disjoint triples with {I, J} unordered; Ingleton
/// over singleton 4-tuples with {I, J} and {K, L} unordered; Zhang-Yeung over
/// singleton 4-tuples with {C, D} unordered.
std::vector<Inequality> family_instances(Family family, size_t n);

struct Violation {
    size_t state = 0;
    std::string inequality;
    BigInt lhs;
    BigInt rhs;
    double slack = 0;
};

struct VerificationReport {
    std::string name;
    size_t states_checked = 0;
    size_t instances = 0;
    size_t violation_count = 0;
    /// First violations in (state, instance) order, capped at kMaxRecordedViolations.
    std::vector<Violation> violations;
    double min_slack = 0;

    bool passed() const { return violation_count == 0; }
    void merge(VerificationReport other);
};

inline constexpr size_t kMaxRecordedViolations = 1000;

/// Evaluates every inequality on every entropy vector. States are numbered by
/// their position in `states`. OpenMP across states.
VerificationReport verify_batch(
    const std::string &name, const std::vector<Inequality> &inequalities, const std::vector<EntropyVector> &states);

VerificationReport verify_batch_serial(
    const std::string &name, const std::vector<Inequality> &inequalities, const std::vector<EntropyVector> &states);

}  // namespace stabent
