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

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "stabent/gaussian.hpp"
#include "stabent/inequalities.hpp"
#include "stabent/io.hpp"
#include "stabent/oracle.hpp"
#include "stabent/stabilizer.hpp"

using namespace stabent;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Explicit path wins; otherwise $STABENT_OUTPUT_DIR/<fallback>; otherwise stdout.
std::optional<std::filesystem::path> output_path(const std::string &explicit_path, const std::string &fallback) {
    if (!explicit_path.empty()) {
        return std::filesystem::path(explicit_path);
    }
    if (const char *dir = std::getenv("STABENT_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
        std::filesystem::create_directories(dir);
        return std::filesystem::path(dir) / fallback;
    }
    return std::nullopt;
}

void emit(const std::string &text, const std::string &explicit_path, const std::string &fallback) {
    auto path = output_path(explicit_path, fallback);
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path);
    if (!out) {
        throw UsageError("cannot write " + path->string());
    }
    out << text;
    std::cerr << "wrote " << path->string() << "\n";
}

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    return in;
}

void set_threads(int threads) {
    if (threads > 0) {
        omp_set_num_threads(threads);
    }
}

// ---- enumerate ----

struct EnumerateArgs {
    int64_t d = 0;
    size_t n = 0;
    std::string out;
    std::string format = "json";
    int threads = 0;
    std::optional<unsigned> max_dim;
};

int run_enumerate(const EnumerateArgs &a) {
    set_threads(a.threads);
    PhaseSpace ps(a.n, a.d);
    std::vector<StabilizerState> states;
    try {
        states = enumerate_isotropic(ps, a.max_dim);
    } catch (const std::length_error &e) {
        throw UsageError(e.what());
    }
    std::ostringstream text;
    if (a.format == "csv") {
        text.precision(17);
        text << "id,kind,mask,size,order,entropy_log_d\n";
        for (size_t id = 0; id < states.size(); id++) {
            for (auto kind : {EntropyKind::quantum, EntropyKind::classical}) {
                auto h = entropy_vector(states[id], kind);
                for (size_t k = 0; k < h.entries().size(); k++) {
                    const auto &e = h.entries()[k];
                    text << id << "," << to_string(kind) << "," << k + 1 << "," << e.subset_size << ","
                         << e.subgroup_order << "," << e.value() << "\n";
                }
            }
        }
    } else {
        for (size_t id = 0; id < states.size(); id++) {
            text << corpus_record_to_json(id, states[id]).dump() << "\n";
        }
    }
    std::string ext = a.format == "csv" ? "csv" : "jsonl";
    emit(text.str(), a.out, "corpus_d" + std::to_string(a.d) + "_n" + std::to_string(a.n) + "." + ext);
    std::cerr << states.size() << " isotropic subgroups\n";
    return kExitPass;
}

// ---- verify ----

struct VerifyArgs {
    std::string corpus;
    std::vector<std::string> families;
    std::vector<std::string> inequality_files;
    bool balanced_only = false;
    std::string kind = "quantum";
    std::string report;
    int threads = 0;
};

int run_verify(const VerifyArgs &a) {
    set_threads(a.threads);
    if (a.families.empty() && a.inequality_files.empty()) {
        throw UsageError("verify needs --family or --inequality");
    }
    if (a.kind != "quantum" && a.kind != "classical") {
        throw UsageError("--kind must be quantum or classical");
    }
    auto in = open_input(a.corpus);
    std::vector<CorpusRecord> records;
    try {
        records = read_corpus(in);
    } catch (const FormatError &e) {
        throw UsageError(a.corpus + ": " + e.what());
    }
    if (records.empty()) {
        throw UsageError(a.corpus + ": empty corpus");
    }
    size_t n = records.front().quantum.n();
    std::vector<EntropyVector> vectors;
    for (const auto &r : records) {
        if (r.quantum.n() != n) {
            throw UsageError(a.corpus + ": records disagree on n");
        }
        vectors.push_back(a.kind == "quantum" ? r.quantum : r.classical);
    }

    std::vector<std::pair<std::string, std::vector<Inequality>>> groups;
    for (const auto &name : a.families) {
        std::vector<Family> fams;
        if (name == "all") {
            fams = {Family::monotonicity, Family::strong_subadditivity, Family::weak_monotonicity,
                    Family::ingleton, Family::zhang_yeung};
        } else {
            try {
                fams = {parse_family(name)};
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
        }
        for (auto f : fams) {
            groups.emplace_back(to_string(f), family_instances(f, n));
        }
    }
    for (const auto &path : a.inequality_files) {
        auto f = open_input(path);
        json j;
        try {
            j = json::parse(f);
        } catch (const json::parse_error &e) {
            throw UsageError(path + ": " + e.what());
        }
        std::vector<Inequality> list;
        try {
            for (const auto &item : j.is_array() ? j : json::array({j})) {
                list.push_back(inequality_from_json(item));
            }
        } catch (const FormatError &e) {
            throw UsageError(path + ": " + e.what());
        }
        for (const auto &q : list) {
            if (q.n() != n) {
                throw UsageError(path + ": inequality " + q.name() + " has n=" + std::to_string(q.n()) +
                                 " but the corpus has n=" + std::to_string(n));
            }
        }
        groups.emplace_back(std::filesystem::path(path).filename().string(), std::move(list));
    }

    json reports = json::array();
    bool pass = true;
    for (auto &[name, list] : groups) {
        if (a.balanced_only) {
            std::erase_if(list, [](const Inequality &q) { return !is_balanced(q); });
        }
        if (list.empty()) {
            json skipped = {{"name", name}, {"skipped", true}, {"pass", true}};
            reports.push_back(skipped);
            continue;
        }
        auto report = verify_batch(name, list, vectors);
        pass = pass && report.passed();
        reports.push_back(report_to_json(report));
        std::cerr << name << ": " << report.instances << " instances x " << report.states_checked << " states, "
                  << report.violation_count << " violations\n";
    }
    json out = {{"corpus", a.corpus}, {"kind", a.kind}, {"n", n}, {"pass", pass}, {"reports", reports}};
    emit(out.dump(2) + "\n", a.report, "verify_report.json");
    return pass ? kExitPass : kExitFail;
}

// ---- oracle-check ----

struct OracleArgs {
    int64_t d = 0;
    size_t n = 0;
    std::string report;
    int threads = 0;
};

json deviation_json(const OracleDeviation &dev) {
    auto leg = [](double x) { return x < 0 ? json(nullptr) : json(x); };
    return {{"projector_idempotent", dev.projector_idempotent},
            {"projector_hermitian", dev.projector_hermitian},
            {"projector_trace", dev.projector_trace},
            {"reduction", dev.reduction},
            {"reduction_up_to_weyl", dev.reduction_up_to_weyl},
            {"von_neumann", dev.von_neumann},
            {"renyi", dev.renyi},
            {"wigner_uniform", leg(dev.wigner_uniform)},
            {"wigner_marginal", leg(dev.wigner_marginal)},
            {"phase_space_identity", dev.phase_space_identity}};
}

int run_oracle(const OracleArgs &a) {
    set_threads(a.threads);
    PhaseSpace ps(a.n, a.d);
    double dim = std::pow(static_cast<double>(a.d), static_cast<double>(a.n));
    if (dim > static_cast<double>(kDenseLimit)) {
        throw UsageError("dense oracle needs d^n <= " + std::to_string(kDenseLimit));
    }
    std::vector<StabilizerState> states;
    try {
        states = enumerate_isotropic(ps);
    } catch (const std::length_error &e) {
        throw UsageError(e.what());
    }
    auto dev = compare_corpus_with_oracle(states);
    bool pass = within(dev);
    OracleTolerances tol;
    json out = {{"d", a.d},
                {"n", a.n},
                {"states", states.size()},
                {"pass", pass},
                {"tolerances", {{"structural", tol.structural}, {"spectral", tol.spectral}, {"wigner", tol.wigner}}},
                {"max_deviation", deviation_json(dev)}};
    emit(out.dump(2) + "\n", a.report,
         "oracle_d" + std::to_string(a.d) + "_n" + std::to_string(a.n) + ".json");
    return pass ? kExitPass : kExitFail;
}

// ---- gaussian ----

struct GaussianArgs {
    size_t n = 3;
    size_t trials = 100;
    std::optional<uint64_t> seed;
    std::string state;
    std::string fixture;
    uint32_t modes = 0;
    size_t samples = 1000000;
    size_t iterations = 200000;
    std::string strategy = "local-perturbation";
    size_t shards = 8;
    std::string out;
    int threads = 0;
};

GaussianState load_state(const std::string &path) {
    auto in = open_input(path);
    try {
        return gaussian_state_from_json(json::parse(in));
    } catch (const json::parse_error &e) {
        throw UsageError(path + ": " + e.what());
    } catch (const FormatError &e) {
        throw UsageError(path + ": " + e.what());
    }
}

void require_physical(const GaussianState &g) {
    auto p = is_physical(g);
    if (!p.physical) {
        std::ostringstream msg;
        msg.precision(6);
        msg << "unphysical covariance matrix: min eigenvalue of Sigma + i sigma_vac Omega is " << p.margin;
        throw UsageError(msg.str());
    }
}

uint64_t require_seed(const GaussianArgs &a) {
    if (!a.seed) {
        throw UsageError("--seed is required for stochastic subcommands");
    }
    return *a.seed;
}

struct StateCheck {
    double alpha_spread = 0;
    double shannon_limit = 0;
    double ssa_min = std::numeric_limits<double>::infinity();
};

StateCheck check_state(const GaussianState &g) {
    StateCheck c;
    ParticleMask full = static_cast<ParticleMask>((1u << g.n()) - 1);
    for (ParticleMask m = 1; m <= full; m++) {
        double s2 = renyi2_quantum(g, m);
        for (double alpha : {0.5, 2.0, 3.0}) {
            c.alpha_spread = std::max(c.alpha_spread, std::abs(renyi2_from_classical(g, m, alpha) - s2));
        }
        double h = shannon_classical(g, m);
        for (double alpha : {1 - 1e-6, 1 + 1e-6}) {
            c.shannon_limit = std::max(c.shannon_limit, std::abs(renyi_alpha_classical(g, m, alpha) - h));
        }
    }
    if (g.n() >= 2) {
        auto v = entropy_vector_gaussian(g);
        for (const auto &q : family_instances(Family::strong_subadditivity, g.n())) {
            c.ssa_min = std::min(c.ssa_min, evaluate_real(q, v.entries()));
        }
    }
    return c;
}

bool check_passes(const StateCheck &c) {
    return c.alpha_spread <= 1e-10 && c.shannon_limit <= 1e-5 && c.ssa_min >= -1e-9;
}

json check_json(const StateCheck &c) {
    return {{"alpha_spread", c.alpha_spread},
            {"shannon_limit_gap", c.shannon_limit},
            {"ssa_min", std::isinf(c.ssa_min) ? json(nullptr) : json(c.ssa_min)}};
}

int run_gaussian_verify(const GaussianArgs &a) {
    set_threads(a.threads);
    json out;
    bool pass = true;
    if (!a.state.empty()) {
        auto g = load_state(a.state);
        require_physical(g);
        auto c = check_state(g);
        pass = check_passes(c);
        auto v = entropy_vector_gaussian(g);
        out = {{"state", a.state}, {"margin", is_physical(g).margin}, {"renyi2", v.entries()}};
        out.update(check_json(c));
        if (g.n() == 4) {
            out["ingleton_value"] = gaussian_ingleton_value(g);
        }
    } else {
        uint64_t seed = require_seed(a);
        if (a.n == 0 || a.n > 16 || a.trials == 0) {
            throw UsageError("need 1 <= n <= 16 and trials > 0");
        }
        std::mt19937_64 rng(seed);
        StateCheck worst;
        for (size_t t = 0; t < a.trials; t++) {
            auto c = check_state(random_physical_state(a.n, rng));
            worst.alpha_spread = std::max(worst.alpha_spread, c.alpha_spread);
            worst.shannon_limit = std::max(worst.shannon_limit, c.shannon_limit);
            worst.ssa_min = std::min(worst.ssa_min, c.ssa_min);
        }
        pass = check_passes(worst);
        out = {{"n", a.n}, {"trials", a.trials}, {"seed", seed}};
        out.update(check_json(worst));
    }
    out["pass"] = pass;
    emit(out.dump(2) + "\n", a.out, "gaussian_verify.json");
    return pass ? kExitPass : kExitFail;
}

int run_gaussian_mc(const GaussianArgs &a) {
    set_threads(a.threads);
    uint64_t seed = require_seed(a);
    if (a.state.empty() == a.fixture.empty()) {
        throw UsageError("gaussian mc needs exactly one of --fixture or --state");
    }
    std::optional<GaussianState> g;
    if (!a.fixture.empty()) {
        try {
            g = gaussian_fixture(a.fixture);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    } else {
        g = load_state(a.state);
    }
    require_physical(*g);
    ParticleMask modes = a.modes != 0 ? a.modes : static_cast<ParticleMask>((1u << g->n()) - 1);
    if ((modes >> g->n()) != 0) {
        throw UsageError("--modes refers to modes beyond n");
    }
    if (a.samples < 10000) {
        throw UsageError("--samples must be at least 10000");
    }
    auto est = mc_renyi2(*g, modes, a.samples, seed);
    double exact = renyi_alpha_classical(*g, modes, 2.0);
    double diff = std::abs(est.entropy - exact);
    bool pass = diff <= 3 * est.standard_error;
    json out = {{"source", a.fixture.empty() ? a.state : a.fixture},
                {"modes", modes},
                {"samples", est.samples},
                {"seed", seed},
                {"estimate", est.entropy},
                {"standard_error", est.standard_error},
                {"closed_form", exact},
                {"relative_error", diff / std::abs(exact)},
                {"sigmas", diff / est.standard_error},
                {"pass", pass}};
    emit(out.dump(2) + "\n", a.out, "gaussian_mc.json");
    return pass ? kExitPass : kExitFail;
}

int run_gaussian_search(const GaussianArgs &a) {
    set_threads(a.threads);
    uint64_t seed = require_seed(a);
    SearchStrategy strategy;
    try {
        strategy = parse_strategy(a.strategy);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (a.iterations == 0 || a.shards == 0) {
        throw UsageError("--iters and --shards must be positive");
    }
    auto result = ingleton_search(seed, a.iterations, strategy, a.shards);
    emit(search_result_to_json(result).dump(2) + "\n", a.out, "ingleton_search.json");
    std::cerr << (result.found ? "violation found" : "no violation found") << ": value " << result.value
              << ", margin " << result.margin << "\n";
    return result.found ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Stabilizer and Gaussian entropy toolkit"};
    app.require_subcommand(1);

    EnumerateArgs ea;
    auto *enumerate = app.add_subcommand("enumerate", "Enumerate isotropic subgroups and their entropy vectors");
    enumerate->add_option("--d", ea.d, "Local dimension")->required()->check(CLI::Range(int64_t{2}, int64_t{1} << 20));
    enumerate->add_option("--n", ea.n, "Number of particles")->required()->check(CLI::Range(size_t{1}, size_t{16}));
    enumerate->add_option("--out", ea.out, "Output file (default: $STABENT_OUTPUT_DIR or stdout)");
    enumerate->add_option("--format", ea.format, "json (line-delimited) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    enumerate->add_option("--threads", ea.threads, "OpenMP threads")->check(CLI::NonNegativeNumber);
    enumerate->add_option("--max-dim", ea.max_dim, "Only subgroups with |M| <= d^k");

    VerifyArgs va;
    auto *verify = app.add_subcommand("verify", "Check information inequalities on a corpus");
    verify->add_option("--corpus", va.corpus, "Line-delimited JSON corpus from enumerate")->required();
    verify->add_option("--family", va.families,
                       "monotonicity, ssa, weak-monotonicity, ingleton, zhang-yeung or all (repeatable)");
    verify->add_option("--inequality", va.inequality_files, "JSON inequality file (object or array; repeatable)");
    verify->add_flag("--balanced-only", va.balanced_only, "Skip unbalanced inequalities");
    verify->add_option("--kind", va.kind, "quantum or classical entropies")
        ->check(CLI::IsMember({"quantum", "classical"}));
    verify->add_option("--report", va.report, "Report file");
    verify->add_option("--threads", va.threads, "OpenMP threads")->check(CLI::NonNegativeNumber);

    OracleArgs oa;
    auto *oracle = app.add_subcommand("oracle-check", "Compare phase-space formulas with dense matrices");
    oracle->add_option("--d", oa.d, "Local dimension")->required()->check(CLI::Range(int64_t{2}, int64_t{4096}));
    oracle->add_option("--n", oa.n, "Number of particles")->required()->check(CLI::Range(size_t{1}, size_t{12}));
    oracle->add_option("--report", oa.report, "Report file");
    oracle->add_option("--threads", oa.threads, "OpenMP threads")->check(CLI::NonNegativeNumber);

    GaussianArgs ga;
    auto *gaussian = app.add_subcommand("gaussian", "Gaussian-state Renyi-2 tools");
    gaussian->require_subcommand(1);
    auto common = [&ga](CLI::App *sub) {
        sub->add_option("--seed", ga.seed, "RNG seed");
        sub->add_option("--out", ga.out, "Output file");
        sub->add_option("--threads", ga.threads, "OpenMP threads")->check(CLI::NonNegativeNumber);
    };
    auto *gverify = gaussian->add_subcommand("verify", "Check the alpha-independence identities");
    common(gverify);
    gverify->add_option("--n", ga.n, "Modes for random states");
    gverify->add_option("--trials", ga.trials, "Random states to check");
    gverify->add_option("--state", ga.state, "Check one GaussianState JSON file instead");
    auto *gmc = gaussian->add_subcommand("mc", "Monte-Carlo estimate of H_2 against the closed form");
    common(gmc);
    gmc->add_option("--fixture", ga.fixture, "vacuum, thermal or correlated");
    gmc->add_option("--state", ga.state, "GaussianState JSON file");
    gmc->add_option("--modes", ga.modes, "Mode subset bitmask (default: all)");
    gmc->add_option("--samples", ga.samples, "Sample count (>= 10000)");
    auto *gsearch = gaussian->add_subcommand("ingleton-search", "Search for a Renyi-2 Ingleton violation");
    common(gsearch);
    gsearch->add_option("--iters", ga.iterations, "Iteration budget");
    gsearch->add_option("--strategy", ga.strategy, "random-wishart, random-pure-plus-noise or local-perturbation");
    gsearch->add_option("--shards", ga.shards, "Independent search shards");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enumerate) {
            return run_enumerate(ea);
        }
        if (*verify) {
            return run_verify(va);
        }
        if (*oracle) {
            return run_oracle(oa);
        }
        if (*gverify) {
            return run_gaussian_verify(ga);
        }
        if (*gmc) {
            return run_gaussian_mc(ga);
        }
        if (*gsearch) {
            return run_gaussian_search(ga);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
