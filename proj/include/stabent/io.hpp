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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabent/gaussian.hpp"
#include "stabent/inequalities.hpp"
#include "stabent/stabilizer.hpp"
#include "stabent/zmod.hpp"

namespace stabent {

using nlohmann::json;

/// Raised for structurally invalid input files.
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// {"d": int, "m": int, "generators": [[int, ...], ...]}
json subgroup_to_json(const Subgroup &s);
Subgroup subgroup_from_json(const json &j);

/// [{"mask", "size", "order", "entropy_log_d"}, ...] ascending by mask.
/// Orders are decimal strings so that they stay exact.
json entropy_vector_to_json(const EntropyVector &h);
EntropyVector entropy_vector_from_json(const json &j, size_t n, int64_t d, EntropyKind kind);

/// CSV with header `mask,size,order,entropy_log_d`.
std::string entropy_vector_to_csv(const EntropyVector &h);

/// {"n": int, "name": str, "nu": {"<mask>": int, ...}}
json inequality_to_json(const Inequality &q);
Inequality inequality_from_json(const json &j);

/// {"n": int, "sigma_vac": 0.5, "mu": [...], "Sigma": [[...], ...]}
json gaussian_state_to_json(const GaussianState &g);
GaussianState gaussian_state_from_json(const json &j);

json report_to_json(const VerificationReport &r);
json search_result_to_json(const IngletonSearchResult &r);

/// One enumerated stabilizer state with both entropy vectors.
struct CorpusRecord {
    size_t id = 0;
    Subgroup subgroup;
    EntropyVector quantum;
    EntropyVector classical;
};

json corpus_record_to_json(size_t id, const StabilizerState &st);
CorpusRecord corpus_record_from_json(const json &j);

/// Line-delimited corpus; blank lines are skipped. Throws FormatError.
std::vector<CorpusRecord> read_corpus(std::istream &in);

}  // namespace stabent
