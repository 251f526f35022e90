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

#include "stabent/io.hpp"

#include <istream>
#include <sstream>

namespace stabent {

namespace {

template <typename T>
T field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw FormatError(std::string("field '") + key + "': " + e.what());
    }
}

BigInt parse_big(const std::string &s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw FormatError("expected a non-negative decimal integer, got '" + s + "'");
    }
    return BigInt(s);
}

}  // namespace

json subgroup_to_json(const Subgroup &s) {
    return {{"d", s.modulus()}, {"m", s.ambient_rank()}, {"generators", s.generators()}};
}

Subgroup subgroup_from_json(const json &j) {
    auto d = field<int64_t>(j, "d");
    auto m = field<size_t>(j, "m");
    auto gens = field<std::vector<IntVec>>(j, "generators");
    if (d < 2 || m == 0) {
        throw FormatError("subgroup needs d >= 2 and m >= 1");
    }
    for (const auto &g : gens) {
        if (g.size() != m) {
            throw FormatError("generator length does not match m");
        }
    }
    return Subgroup::from_generators(gens, m, d);
}

json entropy_vector_to_json(const EntropyVector &h) {
    json entries = json::array();
    for (size_t k = 0; k < h.entries().size(); k++) {
        const auto &e = h.entries()[k];
        entries.push_back({{"mask", k + 1},
                           {"size", e.subset_size},
                           {"order", e.subgroup_order.str()},
                           {"entropy_log_d", e.value()}});
    }
    return entries;
}

EntropyVector entropy_vector_from_json(const json &j, size_t n, int64_t d, EntropyKind kind) {
    if (!j.is_array() || j.size() != (size_t{1} << n) - 1) {
        throw FormatError("entropy vector must list all 2^n - 1 subsets");
    }
    std::vector<ExactEntropy> entries;
    for (size_t k = 0; k < j.size(); k++) {
        const auto &row = j[k];
        if (field<size_t>(row, "mask") != k + 1) {
            throw FormatError("entropy vector rows must be in ascending mask order");
        }
        int size = field<int>(row, "size");
        if (size != popcount(static_cast<ParticleMask>(k + 1))) {
            throw FormatError("entropy vector row size does not match its mask");
        }
        entries.push_back({size, parse_big(field<std::string>(row, "order")), d, kind});
    }
    return EntropyVector(n, d, kind, std::move(entries));
}

std::string entropy_vector_to_csv(const EntropyVector &h) {
    std::ostringstream out;
    out.precision(17);
    out << "mask,size,order,entropy_log_d\n";
    for (size_t k = 0; k < h.entries().size(); k++) {
        const auto &e = h.entries()[k];
        out << k + 1 << "," << e.subset_size << "," << e.subgroup_order << "," << e.value() << "\n";
    }
    return out.str();
}

json inequality_to_json(const Inequality &q) {
    json nu = json::object();
    for (auto [mask, c] : q.coefficients()) {
        nu[std::to_string(mask)] = c;
    }
    return {{"n", q.n()}, {"name", q.name()}, {"nu", nu}};
}

Inequality inequality_from_json(const json &j) {
    auto n = field<size_t>(j, "n");
    auto name = j.contains("name") ? field<std::string>(j, "name") : std::string("custom");
    auto raw = field<std::map<std::string, int64_t>>(j, "nu");
    std::map<ParticleMask, int64_t> nu;
    for (const auto &[key, c] : raw) {
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key.size() > 9) {
            throw FormatError("inequality mask '" + key + "' is not a decimal integer");
        }
        nu[static_cast<ParticleMask>(std::stoul(key))] = c;
    }
    try {
        return Inequality(n, name, nu);
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

json gaussian_state_to_json(const GaussianState &g) {
    std::vector<double> mu(g.mean().begin(), g.mean().end());
    std::vector<std::vector<double>> sigma;
    for (Eigen::Index r = 0; r < g.covariance().rows(); r++) {
        std::vector<double> row(g.covariance().cols());
        for (Eigen::Index c = 0; c < g.covariance().cols(); c++) {
            row[static_cast<size_t>(c)] = g.covariance()(r, c);
        }
        sigma.push_back(std::move(row));
    }
    return {{"n", g.n()}, {"sigma_vac", g.vacuum_variance()}, {"mu", mu}, {"Sigma", sigma}};
}

GaussianState gaussian_state_from_json(const json &j) {
    auto n = field<size_t>(j, "n");
    double sigma_vac = j.contains("sigma_vac") ? field<double>(j, "sigma_vac") : 0.5;
    auto rows = field<std::vector<std::vector<double>>>(j, "Sigma");
    auto dim = static_cast<Eigen::Index>(2 * n);
    if (n == 0 || rows.size() != 2 * n) {
        throw FormatError("Sigma must be 2n x 2n");
    }
    Eigen::MatrixXd sigma(dim, dim);
    for (Eigen::Index r = 0; r < dim; r++) {
        if (rows[static_cast<size_t>(r)].size() != 2 * n) {
            throw FormatError("Sigma must be 2n x 2n");
        }
        for (Eigen::Index c = 0; c < dim; c++) {
            sigma(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
        }
    }
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(dim);
    if (j.contains("mu")) {
        auto m = field<std::vector<double>>(j, "mu");
        if (m.size() != 2 * n) {
            throw FormatError("mu must have 2n entries");
        }
        for (Eigen::Index k = 0; k < dim; k++) {
            mu(k) = m[static_cast<size_t>(k)];
        }
    }
    try {
        return GaussianState(mu, sigma, sigma_vac);
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

json report_to_json(const VerificationReport &r) {
    json violations = json::array();
    for (const auto &v : r.violations) {
        violations.push_back({{"state", v.state},
                              {"inequality", v.inequality},
                              {"lhs", v.lhs.str()},
                              {"rhs", v.rhs.str()},
                              {"slack", v.slack}});
    }
    return {{"name", r.name},
            {"pass", r.passed()},
            {"states_checked", r.states_checked},
            {"instances", r.instances},
            {"violation_count", r.violation_count},
            {"min_slack", r.states_checked == 0 ? json(nullptr) : json(r.min_slack)},
            {"violations", violations}};
}

json search_result_to_json(const IngletonSearchResult &r) {
    json out = {{"found", r.found},
                {"seed", r.seed},
                {"iterations", r.iterations},
                {"strategy", to_string(r.strategy)},
                {"ingleton_value", r.value},
                {"margin", r.margin}};
    if (r.sigma.size() != 0) {
        out["state"] = gaussian_state_to_json(GaussianState(Eigen::VectorXd::Zero(r.sigma.rows()), r.sigma, 0.5));
    }
    return out;
}

json corpus_record_to_json(size_t id, const StabilizerState &st) {
    const auto &ps = st.phase_space();
    return {{"id", id},
            {"d", ps.d()},
            {"n", ps.n()},
            {"generators", st.subgroup().generators()},
            {"order", st.subgroup().order().str()},
            {"quantum", entropy_vector_to_json(entropy_vector(st, EntropyKind::quantum))},
            {"classical", entropy_vector_to_json(entropy_vector(st, EntropyKind::classical))}};
}

CorpusRecord corpus_record_from_json(const json &j) {
    auto id = field<size_t>(j, "id");
    auto d = field<int64_t>(j, "d");
    auto n = field<size_t>(j, "n");
    if (d < 2 || n == 0 || n > 16) {
        throw FormatError("corpus record needs d >= 2 and 1 <= n <= 16");
    }
    auto gens = field<std::vector<IntVec>>(j, "generators");
    for (const auto &g : gens) {
        if (g.size() != 2 * n) {
            throw FormatError("generator length does not match 2n");
        }
    }
    return {id, Subgroup::from_generators(gens, 2 * n, d),
            entropy_vector_from_json(j.at("quantum"), n, d, EntropyKind::quantum),
            entropy_vector_from_json(j.at("classical"), n, d, EntropyKind::classical)};
}

std::vector<CorpusRecord> read_corpus(std::istream &in) {
    std::vector<CorpusRecord> records;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error &e) {
            throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
        }
        try {
            if (!j.contains("quantum") || !j.contains("classical")) {
                throw FormatError("missing entropy vectors");
            }
            records.push_back(corpus_record_from_json(j));
        } catch (const FormatError &e) {
            throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

}  // namespace stabent
