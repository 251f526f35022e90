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

#include "stabent/inequalities.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace stabent {

namespace {

std::string subset_name(ParticleMask mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; i++) {
        if (mask >> i & 1) {
            if (!first) {
                s += ",";
            }
            s += std::to_string(i + 1);
            first = false;
        }
    }
    return s + "}";
}

std::string call_name(const char *family, std::initializer_list<ParticleMask> subsets) {
    std::string s = family;
    s += "(";
    bool first = true;
    for (auto m : subsets) {
        if (!first) {
            s += ",";
        }
        s += subset_name(m);
        first = false;
    }
    return s + ")";
}

void check_subsets(size_t n, std::initializer_list<ParticleMask> subsets, bool disjoint) {
    ParticleMask full = static_cast<ParticleMask>((uint64_t{1} << n) - 1);
    ParticleMask seen = 0;
    for (auto m : subsets) {
        if (m == 0) {
            throw std::invalid_argument("inequality subsets must be nonempty");
        }
        if ((m & ~full) != 0) {
            throw std::invalid_argument("inequality subset refers to particles beyond n");
        }
        if (disjoint && (seen & m) != 0) {
            throw std::invalid_argument("inequality subsets must be pairwise disjoint");
        }
        seen |= m;
    }
}

// Accumulates coefficients; the empty set has entropy zero and is dropped.
struct Terms {
    std::map<ParticleMask, int64_t> nu;

    void add(ParticleMask mask, int64_t c) {
        if (mask != 0) {
            nu[mask] += c;
        }
    }
    void mutual(ParticleMask a, ParticleMask b, int64_t c) {
        add(a, c);
        add(b, c);
        add(a | b, -c);
    }
    void conditional_mutual(ParticleMask a, ParticleMask b, ParticleMask given, int64_t c) {
        add(a | given, c);
        add(b | given, c);
        add(given, -c);
        add(a | b | given, -c);
    }
};

}  // namespace

Inequality::Inequality(size_t n, std::string name, const std::map<ParticleMask, int64_t> &nu)
    : n_(n), name_(std::move(name)) {
    if (n == 0 || n > 16) {
        throw std::invalid_argument("inequality arity must be in [1, 16]");
    }
    ParticleMask full = static_cast<ParticleMask>((uint64_t{1} << n) - 1);
    for (auto [mask, c] : nu) {
        if (mask == 0 || (mask & ~full) != 0) {
            throw std::invalid_argument("coefficient mask " + std::to_string(mask) + " out of range for n=" +
                                        std::to_string(n));
        }
        if (c != 0) {
            nu_[mask] = c;
        }
    }
    if (nu_.empty()) {
        throw std::invalid_argument("inequality '" + name_ + "' has no nonzero coefficient");
    }
}

int64_t Inequality::coefficient(ParticleMask mask) const {
    auto it = nu_.find(mask);
    return it == nu_.end() ? 0 : it->second;
}

std::vector<int64_t> particle_sums(const Inequality &q) {
    std::vector<int64_t> sums(q.n(), 0);
    for (auto [mask, c] : q.coefficients()) {
        for (size_t i = 0; i < q.n(); i++) {
            if (mask >> i & 1) {
                sums[i] += c;
            }
        }
    }
    return sums;
}

bool is_balanced(const Inequality &q) {
    auto sums = particle_sums(q);
    return std::all_of(sums.begin(), sums.end(), [](int64_t s) { return s == 0; });
}

ExactEvaluation evaluate_exact(const Inequality &q, const EntropyVector &h) {
    if (q.n() != h.n()) {
        throw std::invalid_argument(
            "inequality on " + std::to_string(q.n()) + " parties applied to an entropy vector on " +
            std::to_string(h.n()));
    }
    ExactEvaluation result;
    for (auto [mask, c] : q.coefficients()) {
        const auto &e = h.at(mask);
        auto power = static_cast<unsigned>(c > 0 ? c : -c);
        BigInt num = boost::multiprecision::pow(e.numerator(), power);
        BigInt den = boost::multiprecision::pow(e.denominator(), power);
        if (c > 0) {
            result.lhs *= num;
            result.rhs *= den;
        } else {
            result.lhs *= den;
            result.rhs *= num;
        }
        result.slack += static_cast<double>(c) * e.value();
    }
    result.holds = result.lhs >= result.rhs;
    return result;
}

double evaluate_real(const Inequality &q, std::span<const double> values) {
    if (values.size() != (size_t{1} << q.n()) - 1) {
        throw std::invalid_argument("entropy vector size does not match the inequality arity");
    }
    double total = 0;
    for (auto [mask, c] : q.coefficients()) {
        total += static_cast<double>(c) * values[mask - 1];
    }
    return total;
}

Inequality monotonicity(size_t n, ParticleMask i, ParticleMask j) {
    check_subsets(n, {i, j}, false);
    Terms t;
    t.add(i | j, 1);
    t.add(i, -1);
    return Inequality(n, call_name("monotonicity", {i, j}), t.nu);
}

Inequality strong_subadditivity(size_t n, ParticleMask i, ParticleMask j) {
    check_subsets(n, {i, j}, false);
    if ((i & j) == i || (i & j) == j) {
        throw std::invalid_argument("strong subadditivity is trivial when one subset contains the other");
    }
    Terms t;
    t.add(i, 1);
    t.add(j, 1);
    t.add(i & j, -1);
    t.add(i | j, -1);
    return Inequality(n, call_name("ssa", {i, j}), t.nu);
}

Inequality weak_monotonicity(size_t n, ParticleMask i, ParticleMask j, ParticleMask k) {
    check_subsets(n, {i, j, k}, true);
    Terms t;
    t.add(i | k, 1);
    t.add(j | k, 1);
    t.add(i, -1);
    t.add(j, -1);
    return Inequality(n, call_name("weak_monotonicity", {i, j, k}), t.nu);
}

Inequality ingleton(size_t n, ParticleMask i, ParticleMask j, ParticleMask k, ParticleMask l) {
    check_subsets(n, {i, j, k, l}, true);
    Terms t;
    t.conditional_mutual(i, j, k, 1);
    t.conditional_mutual(i, j, l, 1);
    t.mutual(k, l, 1);
    t.mutual(i, j, -1);
    return Inequality(n, call_name("ingleton", {i, j, k, l}), t.nu);
}

Inequality zhang_yeung(size_t n, ParticleMask a, ParticleMask b, ParticleMask c, ParticleMask d) {
    check_subsets(n, {a, b, c, d}, true);
    Terms t;
    t.mutual(a, b, 1);
    t.mutual(a, c | d, 1);
    t.conditional_mutual(c, d, a, 3);
    t.conditional_mutual(c, d, b, 1);
    t.mutual(c, d, -2);
    return Inequality(n, call_name("zhang_yeung", {a, b, c, d}), t.nu);
}

const char *to_string(Family family) {
    switch (family) {
        case Family::monotonicity:
            return "monotonicity";
        case Family::strong_subadditivity:
            return "ssa";
        case Family::weak_monotonicity:
            return "weak-monotonicity";
        case Family::ingleton:
            return "ingleton";
        case Family::zhang_yeung:
            return "zhang-yeung";
    }
    return "unknown";
}

Family parse_family(const std::string &name) {
    for (auto f : {Family::monotonicity, Family::strong_subadditivity, Family::weak_monotonicity, Family::ingleton,
                   Family::zhang_yeung}) {
        if (name == to_string(f)) {
            return f;
        }
    }
    throw std::invalid_argument(
        "unknown inequality family '" + name +
        "' (expected monotonicity, ssa, weak-monotonicity, ingleton or zhang-yeung)");
}

std::vector<Inequality> family_instances(Family family, size_t n) {
    ParticleMask full = static_cast<ParticleMask>((uint64_t{1} << n) - 1);
    std::vector<Inequality> result;
    switch (family) {
        case Family::monotonicity:
            for (ParticleMask u = 1; u <= full; u++) {
                for (ParticleMask i = (u - 1) & u; i != 0; i = (i - 1) & u) {
                    result.push_back(monotonicity(n, i, u));
                }
            }
            break;
        case Family::strong_subadditivity:
            for (ParticleMask i = 1; i <= full; i++) {
                for (ParticleMask j = i + 1; j <= full; j++) {
                    if ((i & j) != i && (i & j) != j) {
                        result.push_back(strong_subadditivity(n, i, j));
                    }
                }
            }
            break;
        case Family::weak_monotonicity:
            for (ParticleMask k = 1; k <= full; k++) {
                for (ParticleMask i = 1; i <= full; i++) {
                    for (ParticleMask j = i + 1; j <= full; j++) {
                        if ((i & j) == 0 && (i & k) == 0 && (j & k) == 0) {
                            result.push_back(weak_monotonicity(n, i, j, k));
                        }
                    }
                }
            }
            break;
        case Family::ingleton:
        case Family::zhang_yeung:
            for (size_t a = 0; a < n; a++) {
                for (size_t b = 0; b < n; b++) {
                    for (size_t c = 0; c < n; c++) {
                        for (size_t d = c + 1; d < n; d++) {
                            if (a == b || a == c || a == d || b == c || b == d) {
                                continue;
                            }
                            auto bit = [](size_t x) { return static_cast<ParticleMask>(1u << x); };
                            if (family == Family::zhang_yeung) {
                                result.push_back(zhang_yeung(n, bit(a), bit(b), bit(c), bit(d)));
                            } else if (a < b) {
                                result.push_back(ingleton(n, bit(a), bit(b), bit(c), bit(d)));
                            }
                        }
                    }
                }
            }
            break;
    }
    return result;
}

void VerificationReport::merge(VerificationReport other) {
    states_checked += other.states_checked;
    violation_count += other.violation_count;
    min_slack = std::min(min_slack, other.min_slack);
    for (auto &v : other.violations) {
        if (violations.size() >= kMaxRecordedViolations) {
            break;
        }
        violations.push_back(std::move(v));
    }
}

namespace {

VerificationReport verify_one(const std::vector<Inequality> &inequalities, const EntropyVector &h, size_t id) {
    VerificationReport report;
    report.states_checked = 1;
    report.min_slack = std::numeric_limits<double>::infinity();
    for (const auto &q : inequalities) {
        auto eval = evaluate_exact(q, h);
        report.min_slack = std::min(report.min_slack, eval.slack);
        if (!eval.holds) {
            report.violation_count++;
            if (report.violations.size() < kMaxRecordedViolations) {
                report.violations.push_back({id, q.name(), eval.lhs, eval.rhs, eval.slack});
            }
        }
    }
    return report;
}

VerificationReport empty_report(const std::string &name, const std::vector<Inequality> &inequalities) {
    VerificationReport report;
    report.name = name;
    report.instances = inequalities.size();
    report.min_slack = std::numeric_limits<double>::infinity();
    return report;
}

}  // namespace

VerificationReport verify_batch(
    const std::string &name, const std::vector<Inequality> &inequalities, const std::vector<EntropyVector> &states) {
    std::vector<VerificationReport> per_state(states.size());
    auto count = static_cast<int64_t>(states.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (int64_t i = 0; i < count; i++) {
        per_state[static_cast<size_t>(i)] =
            verify_one(inequalities, states[static_cast<size_t>(i)], static_cast<size_t>(i));
    }
    auto report = empty_report(name, inequalities);
    for (auto &r : per_state) {
        report.merge(std::move(r));
    }
    return report;
}

VerificationReport verify_batch_serial(
    const std::string &name, const std::vector<Inequality> &inequalities, const std::vector<EntropyVector> &states) {
    auto report = empty_report(name, inequalities);
    for (size_t i = 0; i < states.size(); i++) {
        report.merge(verify_one(inequalities, states[i], i));
    }
    return report;
}

}  // namespace stabent
