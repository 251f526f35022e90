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

// Serial reference vs OpenMP kernels. Usage: bench_kernels [repetitions]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "stabent/gaussian.hpp"
#include "stabent/inequalities.hpp"
#include "stabent/oracle.hpp"
#include "stabent/stabilizer.hpp"

using namespace stabent;

namespace {

double best_of(int reps, const std::function<void()> &f) {
    double best = 1e300;
    for (int r = 0; r < reps; r++) {
        auto start = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

void row(const std::string &name, double serial, double parallel) {
    std::printf("%-34s %10.4f %10.4f %8.2fx\n", name.c_str(), serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char **argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

    for (auto [d, n] : std::vector<std::pair<int64_t, size_t>>{{2, 3}, {4, 2}, {2, 4}}) {
        PhaseSpace ps(n, d);
        volatile size_t sink = 0;
        double s = best_of(reps, [&] { sink = enumerate_isotropic_serial(ps).size(); });
        double p = best_of(reps, [&] { sink = enumerate_isotropic(ps).size(); });
        row("enumerate d=" + std::to_string(d) + " n=" + std::to_string(n), s, p);
    }

    auto corpus = enumerate_isotropic(PhaseSpace(4, 2));
    std::vector<EntropyVector> vectors;
    for (const auto &st : corpus) {
        vectors.push_back(entropy_vector(st, EntropyKind::quantum));
    }
    std::vector<Inequality> all;
    for (auto f : {Family::strong_subadditivity, Family::weak_monotonicity, Family::ingleton, Family::zhang_yeung}) {
        auto inst = family_instances(f, 4);
        all.insert(all.end(), inst.begin(), inst.end());
    }
    {
        volatile size_t sink = 0;
        double s = best_of(reps, [&] { sink = verify_batch_serial("all", all, vectors).violation_count; });
        double p = best_of(reps, [&] { sink = verify_batch("all", all, vectors).violation_count; });
        row("verify_batch d=2 n=4 (103 ineq)", s, p);
    }

    auto oracle_corpus = enumerate_isotropic(PhaseSpace(2, 4));
    {
        volatile double sink = 0;
        double s = best_of(reps, [&] { sink = compare_corpus_with_oracle_serial(oracle_corpus).von_neumann; });
        double p = best_of(reps, [&] { sink = compare_corpus_with_oracle(oracle_corpus).von_neumann; });
        row("oracle corpus d=4 n=2", s, p);
    }

    auto g = gaussian_fixture("correlated");
    {
        volatile double sink = 0;
        double s = best_of(reps, [&] { sink = mc_renyi2_serial(g, 0b11, 1000000, 1).entropy; });
        double p = best_of(reps, [&] { sink = mc_renyi2(g, 0b11, 1000000, 1).entropy; });
        row("mc_renyi2 1e6 samples", s, p);
    }
    return 0;
}
