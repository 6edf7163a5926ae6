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

#include "strand/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>

#include "strand/error.hpp"

namespace strand {

namespace {

template <class M>
std::size_t scan_count(const M& matcher, std::string_view text) {
    std::size_t count = 0;
    auto scan = matcher.scan(text);
    while (scan.next()) ++count;
    return count;
}

// One timing pass with the matcher prebuilt outside the loop.
std::size_t count_prebuilt(Algorithm a, const std::string& pattern, std::string_view text,
                           std::size_t iterations) {
    std::size_t sink = 0;
    auto loop = [&](const auto& m) {
        for (std::size_t i = 0; i < iterations; ++i) sink += scan_count(m, text);
    };
    switch (a) {
        case Algorithm::naive: loop(NaiveMatcher(pattern)); break;
        case Algorithm::kmp: loop(KmpMatcher(pattern)); break;
        case Algorithm::horspool: loop(HorspoolMatcher(pattern)); break;
        case Algorithm::bndm: loop(BndmMatcher(pattern)); break;
        case Algorithm::bom: loop(BomMatcher(pattern)); break;
        case Algorithm::shift_and: loop(ShiftAndMatcher(pattern)); break;
    }
    return sink;
}

std::string_view display_name(Algorithm a) {
    switch (a) {
        case Algorithm::naive: return "Naive";
        case Algorithm::kmp: return "KMP";
        case Algorithm::horspool: return "Horspool";
        case Algorithm::bndm: return "BNDM";
        case Algorithm::bom: return "BOM";
        case Algorithm::shift_and: return "Shift-And";
    }
    return "?";
}

}  // namespace

std::string synthetic_text(std::size_t len, std::uint64_t seed) {
    static constexpr char kBases[4] = {'A', 'C', 'G', 'T'};
    std::mt19937_64 rng(seed);
    std::string text(len, 'A');
    for (auto& c : text) c = kBases[rng() & 3];
    return text;
}

std::vector<Algorithm> default_bench_algorithms() {
    return {Algorithm::bndm, Algorithm::horspool, Algorithm::bom, Algorithm::shift_and};
}

BenchReport run_bench(const BenchConfig& cfg) {
    if (cfg.iterations < 1) throw OutOfBounds("iterations must be at least 1");
    BenchReport report;
    bool have_expected = false;
    std::size_t expected = 0;
    Algorithm expected_from = Algorithm::naive;
    for (Algorithm a : cfg.algorithms) {
        const std::size_t matches = count_matches(a, cfg.pattern, cfg.text);
        if (!have_expected) {
            have_expected = true;
            expected = matches;
            expected_from = a;
        } else if (matches != expected) {
            throw InternalConsistencyError(
                std::string(algorithm_name(a)) + " found " + std::to_string(matches) +
                " matches where " + std::string(algorithm_name(expected_from)) + " found " +
                std::to_string(expected));
        }

        std::size_t sink = 0;
        const auto start = std::chrono::steady_clock::now();
        if (cfg.include_init) {
            for (std::size_t i = 0; i < cfg.iterations; ++i)
                sink += count_matches(a, cfg.pattern, cfg.text);
        } else {
            sink = count_prebuilt(a, cfg.pattern, cfg.text, cfg.iterations);
        }
        const auto stop = std::chrono::steady_clock::now();
        if (sink != cfg.iterations * matches)
            throw InternalConsistencyError(std::string(algorithm_name(a)) +
                                           " match count drifted across iterations");

        const double total_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        report.rows.push_back(
            {a, cfg.iterations, total_ms, total_ms * 1000.0 / cfg.iterations, matches});
    }
    return report;
}

void emit_tsv(const BenchReport& report, std::ostream& out) {
    out << "algorithm\titerations\ttotal_ms\tmean_us\tmatches\n";
    char buf[64];
    for (const auto& r : report.rows) {
        out << algorithm_name(r.algorithm) << '\t' << r.iterations << '\t';
        std::snprintf(buf, sizeof buf, "%.3f\t%.3f", r.total_ms, r.mean_us);
        out << buf << '\t' << r.matches << '\n';
    }
}

void emit_pretty(const BenchReport& report, std::ostream& out) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-10s %12s %12s %10s", "algorithm", "mean/iter", "total",
                  "matches");
    out << buf << '\n';
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%-10s %9.3f us %9.3f ms %10zu",
                      std::string(display_name(r.algorithm)).c_str(), r.mean_us, r.total_ms,
                      r.matches);
        out << buf << '\n';
    }
}

}  // namespace strand
