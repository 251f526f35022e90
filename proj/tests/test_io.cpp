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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "stabent/io.hpp"

using namespace stabent;

TEST_CASE("subgroup round trip") {
    auto s = Subgroup::from_generators({{2, 1, 0, 3}, {0, 2, 2, 0}}, 4, 4);
    auto j = subgroup_to_json(s);
    CHECK(j["d"] == 4);
    CHECK(j["m"] == 4);
    CHECK(subgroup_from_json(j) == s);
    CHECK(subgroup_from_json(json::parse(j.dump())) == s);
    CHECK_THROWS_AS(subgroup_from_json(json::parse(R"({"d":4,"m":2,"generators":[[1,2,3]]})")), FormatError);
    CHECK_THROWS_AS(subgroup_from_json(json::parse(R"({"d":1,"m":2,"generators":[]})")), FormatError);
    CHECK_THROWS_AS(subgroup_from_json(json::parse(R"({"m":2,"generators":[]})")), FormatError);
    CHECK_THROWS_AS(subgroup_from_json(json::parse(R"({"d":"x","m":2,"generators":[]})")), FormatError);
}

TEST_CASE("entropy vector json and csv") {
    StabilizerState bell(PhaseSpace(2, 2), Subgroup::from_generators({{0, 1, 0, 1}, {1, 0, 1, 0}}, 4, 2));
    auto h = entropy_vector(bell, EntropyKind::quantum);
    auto j = entropy_vector_to_json(h);
    REQUIRE(j.size() == 3);
    CHECK(j[2]["mask"] == 3);
    CHECK(j[2]["order"] == "4");
    CHECK(j[0]["entropy_log_d"] == 1.0);
    CHECK(entropy_vector_from_json(j, 2, 2, EntropyKind::quantum) == h);
    CHECK(entropy_vector_to_csv(h) == "mask,size,order,entropy_log_d\n1,1,1,1\n2,1,1,1\n3,2,4,0\n");

    auto bad = j;
    bad[1]["mask"] = 3;
    CHECK_THROWS_AS(entropy_vector_from_json(bad, 2, 2, EntropyKind::quantum), FormatError);
    bad = j;
    bad[0]["order"] = "-4";
    CHECK_THROWS_AS(entropy_vector_from_json(bad, 2, 2, EntropyKind::quantum), FormatError);
    bad = j;
    bad[0]["size"] = 2;
    CHECK_THROWS_AS(entropy_vector_from_json(bad, 2, 2, EntropyKind::quantum), FormatError);
    CHECK_THROWS_AS(entropy_vector_from_json(j, 3, 2, EntropyKind::quantum), FormatError);
}

TEST_CASE("inequality round trip") {
    auto q = ingleton(4, 1, 2, 4, 8);
    auto j = inequality_to_json(q);
    CHECK(j["nu"]["3"] == 1);
    CHECK(j["nu"]["1"] == -1);
    CHECK(inequality_from_json(json::parse(j.dump())) == q);
    auto custom = inequality_from_json(json::parse(R"({"n":2,"nu":{"3":1,"1":-1}})"));
    CHECK(custom.name() == "custom");
    CHECK(custom.coefficients() == monotonicity(2, 1, 3).coefficients());
    CHECK_THROWS_AS(inequality_from_json(json::parse(R"({"n":2,"nu":{"x":1}})")), FormatError);
    CHECK_THROWS_AS(inequality_from_json(json::parse(R"({"n":2,"nu":{"4":1}})")), FormatError);
    CHECK_THROWS_AS(inequality_from_json(json::parse(R"({"n":2,"nu":{}})")), FormatError);
    CHECK_THROWS_AS(inequality_from_json(json::parse(R"({"n":2,"nu":{"1":0.5}})")), FormatError);
}

TEST_CASE("gaussian state round trip") {
    std::mt19937_64 rng(1);
    auto g = random_physical_state(3, rng);
    auto j = json::parse(gaussian_state_to_json(g).dump());
    auto back = gaussian_state_from_json(j);
    CHECK(back.covariance() == g.covariance());
    CHECK(back.mean() == g.mean());
    CHECK(back.vacuum_variance() == 0.5);
    auto minimal = gaussian_state_from_json(json::parse(R"({"n":1,"Sigma":[[1,0],[0,1]]})"));
    CHECK(minimal.mean().isZero());
    CHECK_THROWS_AS(gaussian_state_from_json(json::parse(R"({"n":1,"Sigma":[[1,0.5],[0,1]]})")), FormatError);
    CHECK_THROWS_AS(gaussian_state_from_json(json::parse(R"({"n":2,"Sigma":[[1,0],[0,1]]})")), FormatError);
    CHECK_THROWS_AS(gaussian_state_from_json(json::parse(R"({"n":1,"mu":[0],"Sigma":[[1,0],[0,1]]})")), FormatError);
}

TEST_CASE("corpus round trip") {
    auto corpus = enumerate_isotropic(PhaseSpace(2, 3));
    std::ostringstream out;
    for (size_t i = 0; i < corpus.size(); i++) {
        out << corpus_record_to_json(i, corpus[i]).dump() << "\n";
    }
    std::istringstream in(out.str() + "\n");
    auto records = read_corpus(in);
    REQUIRE(records.size() == corpus.size());
    for (size_t i = 0; i < corpus.size(); i++) {
        CHECK(records[i].id == i);
        CHECK(records[i].subgroup == corpus[i].subgroup());
        CHECK(records[i].quantum == entropy_vector(corpus[i], EntropyKind::quantum));
        CHECK(records[i].classical == entropy_vector(corpus[i], EntropyKind::classical));
    }

    std::istringstream truncated(R"({"id":0,"d":3,"n":2,"generators":[]})" "\n");
    CHECK_THROWS_AS(read_corpus(truncated), FormatError);
    std::istringstream garbage("{not json\n");
    CHECK_THROWS_AS(read_corpus(garbage), FormatError);
}

TEST_CASE("report json") {
    VerificationReport r;
    r.name = "mono";
    r.states_checked = 2;
    r.instances = 1;
    r.violation_count = 1;
    r.min_slack = -1;
    r.violations.push_back({1, "monotonicity({1},{1,2})", BigInt(2), BigInt(4), -1});
    auto j = report_to_json(r);
    CHECK(j["pass"] == false);
    CHECK(j["violations"][0]["rhs"] == "4");
    CHECK(j["min_slack"] == -1.0);
    VerificationReport empty;
    CHECK(report_to_json(empty)["min_slack"].is_null());
}
