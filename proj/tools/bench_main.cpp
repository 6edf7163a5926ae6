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

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "strand/bench.hpp"
#include "strand/error.hpp"
#include "strand/seqio.hpp"

namespace {

// "16000:42" -> length 16000, seed 42.
std::pair<std::size_t, std::uint64_t> parse_synthetic(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw strand::Error("--synthetic expects <length>:<seed>, got '" + spec + "'");
    try {
        std::size_t used = 0;
        const std::size_t len = std::stoull(spec.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("");
        const std::string seed_part = spec.substr(colon + 1);
        const std::uint64_t seed = std::stoull(seed_part, &used);
        if (used != seed_part.size()) throw std::invalid_argument("");
        return {len, seed};
    } catch (const std::logic_error&) {
        throw strand::Error("--synthetic expects <length>:<seed>, got '" + spec + "'");
    }
}

std::string load_fasta_text(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw strand::IoError("cannot open '" + path + "'");
    strand::FastaReader reader(file);
    auto rec = reader.next();
    if (!rec) throw strand::UnexpectedEof("'" + path + "' contains no records");
    return std::move(rec->seq);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pattern-matching benchmark"};
    std::string algorithm = "all";
    std::string pattern = "GCGCGTACACACCGCCCG";
    std::string text_file;
    std::string synthetic;
    std::string format = "tsv";
    std::size_t iterations = 10000;
    bool no_init = false;
    bool widen = false;

    app.add_option("--algorithm", algorithm,
                   "naive, kmp, horspool, bndm, bom, shift-and, or all")
        ->capture_default_str();
    app.add_option("--pattern", pattern, "pattern to search for")->capture_default_str();
    auto* text_opt =
        app.add_option("--text-file", text_file, "FASTA file; its first record is the text");
    auto* syn_opt =
        app.add_option("--synthetic", synthetic, "random DNA text as <length>:<seed>");
    text_opt->excludes(syn_opt);
    syn_opt->excludes(text_opt);
    app.add_option("--iterations", iterations, "search passes per algorithm")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_flag("--no-init", no_init, "build each matcher once, outside the timed loop");
    app.add_flag("--widen", widen, "make 'all' also cover kmp and naive");
    app.add_option("--format", format, "tsv or pretty")
        ->capture_default_str()
        ->check(CLI::IsMember({"tsv", "pretty"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (text_file.empty() && synthetic.empty())
            throw strand::Error("one of --text-file and --synthetic is required");

        strand::BenchConfig cfg;
        cfg.pattern = pattern;
        cfg.iterations = iterations;
        cfg.include_init = !no_init;
        if (!synthetic.empty()) {
            auto [len, seed] = parse_synthetic(synthetic);
            cfg.text = strand::synthetic_text(len, seed);
        } else {
            cfg.text = load_fasta_text(text_file);
        }
        if (algorithm == "all") {
            if (widen) {
                cfg.algorithms.push_back(strand::Algorithm::kmp);
                cfg.algorithms.push_back(strand::Algorithm::naive);
            }
        } else {
            cfg.algorithms = {strand::algorithm_from_name(algorithm)};
        }

        const strand::BenchReport report = strand::run_bench(cfg);
        if (format == "pretty")
            strand::emit_pretty(report, std::cout);
        else
            strand::emit_tsv(report, std::cout);
        return std::cout ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "bench: " << e.what() << '\n';
        return 1;
    }
}
