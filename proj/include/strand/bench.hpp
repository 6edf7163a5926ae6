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

#ifndef STRAND_BENCH_HPP
#define STRAND_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "strand/exact_match.hpp"

namespace strand {

/// Uniform random DNA of the given length; a fixed seed fixes the text.
std::string synthetic_text(std::size_t len, std::uint64_t seed);

/// The default benchmark workload searches these four algorithms.
std::vector<Algorithm> default_bench_algorithms();

/// Everything one benchmark run needs. When include_init is set, each
/// iteration rebuilds the matcher so that preprocessing is timed too.
struct BenchConfig {
    std::vector<Algorithm> algorithms = default_bench_algorithms();
    std::string pattern;
    std::string text;
    std::size_t iterations = 10000;
    bool include_init = true;
};

struct BenchRow {
    Algorithm algorithm;
    std::size_t iterations = 0;
    double total_ms = 0.0;
    double mean_us = 0.0;
    std::size_t matches = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

/// Times every configured algorithm over the same text and pattern. All
/// algorithms must find the same number of matches; a disagreement is a
/// library bug and raises InternalConsistencyError.
BenchReport run_bench(const BenchConfig& cfg);

/// Tab-separated table, one row per algorithm, fixed header.
void emit_tsv(const BenchReport& report, std::ostream& out);

/// Human-readable table with display names, aligned columns.
void emit_pretty(const BenchReport& report, std::ostream& out);

}  // namespace strand

#endif  // STRAND_BENCH_HPP
