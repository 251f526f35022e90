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

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <vector>

namespace stabent::testing {

// Shannon entropies (bits) of all 15 marginals of a random joint distribution
// of 4 variables with alphabets of size 2 or 3. Entry k is the subset mask k+1.
inline std::vector<double> random_shannon_vector(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> alphabet(2, 3);
    std::array<int, 4> sizes{};
    for (auto &s : sizes) {
        s = alphabet(rng);
    }
    size_t total = static_cast<size_t>(sizes[0] * sizes[1] * sizes[2] * sizes[3]);
    std::vector<double> p(total);
    // Sparse, heavy-tailed weights make degenerate dependence structures likely.
    std::exponential_distribution<double> e(1.0);
    for (auto &x : p) {
        x = rng() % 3 == 0 ? 0.0 : std::pow(e(rng), 3);
    }
    double z = 0;
    for (double x : p) {
        z += x;
    }
    if (z == 0) {
        p[0] = z = 1;
    }
    std::vector<double> h(15);
    for (unsigned mask = 1; mask < 16; mask++) {
        std::map<std::array<int, 4>, double> marginal;
        for (size_t idx = 0; idx < total; idx++) {
            std::array<int, 4> key{};
            size_t rest = idx;
            for (int v = 0; v < 4; v++) {
                int x = static_cast<int>(rest % static_cast<size_t>(sizes[v]));
                rest /= static_cast<size_t>(sizes[v]);
                key[v] = (mask >> v) & 1 ? x : -1;
            }
            marginal[key] += p[idx] / z;
        }
        double s = 0;
        for (auto [k, q] : marginal) {
            if (q > 0) {
                s -= q * std::log2(q);
            }
        }
        h[mask - 1] = s;
    }
    return h;
}

}  // namespace stabent::testing
