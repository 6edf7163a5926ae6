/*
 * Copyright 2026 The strand Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "strand/bench.hpp"

#include "oracles.hpp"

using strand::Algorithm;
using strand::BenchConfig;
using strand::BenchReport;

TEST_CASE("synthetic text is deterministic dna") {
    std::string t1 = strand::synthetic_text(1000, 42);
    std::string t2 = strand::synthetic_text(1000, 42);
    CHECK(t1 == t2);
    CHECK(t1.size() == 1000);
    for (char c : t1) CHECK((c == 'A' || c == 'C' || c == 'G' || c == 'T'));

    CHECK(strand::synthetic_text(1000, 43) != t1);
    CHECK(strand::synthetic_text(0, 1).empty());
}

TEST_CASE("default benchmark algorithms and their order") {
    const std::vector<Algorithm> want = {Algorithm::bndm, Algorithm::horspool, Algorithm::bom,
                                         Algorithm::shift_and};
    CHECK(strand::default_bench_algorithms() == want);
}

TEST_CASE("benchmark rows count matches consistently") {
    BenchConfig cfg;
    cfg.pattern = "ACGT";
    cfg.text = strand::synthetic_text(2000, 7);
    cfg.iterations = 3;

    std::size_t want = oracle::scan_positions(cfg.pattern, cfg.text).size();
    BenchReport report = strand::run_bench(cfg);
    REQUIRE(report.rows.size() == 4);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        CHECK(report.rows[i].algorithm == cfg.algorithms[i]);
        CHECK(report.rows[i].iterations == 3);
        CHECK(report.rows[i].matches == want);
        CHECK(report.rows[i].total_ms >= 0.0);
        CHECK(report.rows[i].mean_us >= 0.0);
        CHECK(report.rows[i].mean_us ==
              doctest::Approx(report.rows[i].total_ms * 1000.0 / 3.0).epsilon(0.01));
    }

    cfg.include_init = false;
    BenchReport warm = strand::run_bench(cfg);
    REQUIRE(warm.rows.size() == 4);
    for (std::size_t i = 0; i < warm.rows.size(); ++i) CHECK(warm.rows[i].matches == want);
}

TEST_CASE("benchmark configuration is validated") {
    BenchConfig cfg;
    cfg.pattern = "ACGT";
    cfg.text = "ACGTACGT";
    cfg.iterations = 0;
    CHECK_THROWS_AS(strand::run_bench(cfg), strand::OutOfBounds);

    cfg.iterations = 1;
    cfg.pattern = "";
    CHECK_THROWS_AS(strand::run_bench(cfg), strand::EmptyPattern);
}

TEST_CASE("tab-separated output has the fixed header and parseable rows") {
    BenchConfig cfg;
    cfg.pattern = "GATTACA";
    cfg.text = strand::synthetic_text(5000, 99);
    cfg.iterations = 2;
    cfg.algorithms = {Algorithm::kmp, Algorithm::shift_and};

    std::ostringstream out;
    strand::emit_tsv(strand::run_bench(cfg), out);

    std::istringstream lines(out.str());
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "algorithm\titerations\ttotal_ms\tmean_us\tmatches");

    std::vector<std::string> names;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string algorithm, iterations, total_ms, mean_us, matches;
        REQUIRE(std::getline(fields, algorithm, '\t'));
        REQUIRE(std::getline(fields, iterations, '\t'));
        REQUIRE(std::getline(fields, total_ms, '\t'));
        REQUIRE(std::getline(fields, mean_us, '\t'));
        REQUIRE(std::getline(fields, matches, '\t'));
        CHECK(std::stoull(iterations) == 2);
        CHECK(std::stod(total_ms) >= 0.0);
        CHECK(std::stod(mean_us) >= 0.0);
        std::stoull(matches);
        names.push_back(algorithm);
    }
    const std::vector<std::string> want = {"kmp", "shift-and"};
    CHECK(names == want);
}

TEST_CASE("pretty output uses display names") {
    BenchConfig cfg;
    cfg.pattern = "ACGTACGT";
    cfg.text = strand::synthetic_text(3000, 5);
    cfg.iterations = 1;

    std::ostringstream out;
    strand::emit_pretty(strand::run_bench(cfg), out);
    const std::string s = out.str();
    CHECK(s.find("BNDM") != std::string::npos);
    CHECK(s.find("Horspool") != std::string::npos);
    CHECK(s.find("BOM") != std::string::npos);
    CHECK(s.find("Shift-And") != std::string::npos);
}
