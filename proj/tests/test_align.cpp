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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "strand/align.hpp"

#include "oracles.hpp"

using strand::Alignment;
using strand::AlignMode;
using strand::AlignOp;
using strand::Scoring;

namespace {

const Scoring kUnit = Scoring::simple(1, -1, -1, -1);

std::vector<AlignOp> ops(std::initializer_list<AlignOp> l) { return l; }

}  // namespace

TEST_CASE("global alignment of identical sequences") {
    Alignment a = strand::align("AAA", "AAA", kUnit, AlignMode::global);
    CHECK(a.score == 3);
    CHECK(a.ops == ops({AlignOp::match, AlignOp::match, AlignOp::match}));
    CHECK(a.x_start == 0);
    CHECK(a.x_end == 3);
    CHECK(a.y_start == 0);
    CHECK(a.y_end == 3);
}

TEST_CASE("global alignment opens a gap") {
    Alignment a = strand::align("ACGT", "AGT", kUnit, AlignMode::global);
    CHECK(a.score == 1);
    CHECK(a.ops == ops({AlignOp::match, AlignOp::del, AlignOp::match, AlignOp::match}));
    CHECK(a.x_end == 4);
    CHECK(a.y_end == 3);
}

TEST_CASE("local alignment finds the embedded word") {
    Alignment a = strand::align("ACGT", "TTTTACGTTTTT", kUnit, AlignMode::local);
    CHECK(a.score == 4);
    CHECK(a.ops == ops({AlignOp::match, AlignOp::match, AlignOp::match, AlignOp::match}));
    CHECK(a.x_start == 0);
    CHECK(a.x_end == 4);
    CHECK(a.y_start == 4);
    CHECK(a.y_end == 8);
}

TEST_CASE("semiglobal alignment embeds x with free y flanks") {
    Alignment a = strand::align("ACGT", "CCACGTCC", kUnit, AlignMode::semiglobal);
    CHECK(a.score == 4);
    CHECK(a.x_start == 0);
    CHECK(a.x_end == 4);
    CHECK(a.y_start == 2);
    CHECK(a.y_end == 6);
    CHECK(a.ops == ops({AlignOp::match, AlignOp::match, AlignOp::match, AlignOp::match}));
}

TEST_CASE("empty sequences") {
    Scoring s = Scoring::simple(1, -1, -2, -1);

    Alignment both = strand::align("", "", s, AlignMode::global);
    CHECK(both.score == 0);
    CHECK(both.ops.empty());

    Alignment no_y = strand::align("AC", "", s, AlignMode::global);
    CHECK(no_y.score == -4);
    CHECK(no_y.ops == ops({AlignOp::del, AlignOp::del}));

    Alignment no_x = strand::align("", "AC", s, AlignMode::global);
    CHECK(no_x.score == -4);
    CHECK(no_x.ops == ops({AlignOp::ins, AlignOp::ins}));

    Alignment semi = strand::align("", "ACGT", s, AlignMode::semiglobal);
    CHECK(semi.score == 0);
    CHECK(semi.ops.empty());
    CHECK(semi.y_start == semi.y_end);

    Alignment local = strand::align("", "", s, AlignMode::local);
    CHECK(local.score == 0);
    CHECK(local.ops.empty());
}

TEST_CASE("local alignment of all-mismatch sequences is empty") {
    Alignment a = strand::align("AAAA", "TTTT", kUnit, AlignMode::local);
    CHECK(a.score == 0);
    CHECK(a.ops.empty());
    CHECK(a.x_start == a.x_end);
    CHECK(a.y_start == a.y_end);
}

TEST_CASE("gap runs are preferred over direction changes") {
    Scoring s = Scoring::simple(0, -10, -5, -1);
    Alignment a = strand::align("AAAA", "AA", s, AlignMode::global);
    CHECK(a.score == -7);
    int dels = 0;
    for (AlignOp op : a.ops) dels += op == AlignOp::del;
    CHECK(dels == 2);
    oracle::Rescore r = oracle::rescore(a, "AAAA", "AA", s);
    CHECK(r.ok);
    CHECK(r.score == a.score);
}

TEST_CASE("deterministic choice among equal-scoring paths") {
    Scoring s = Scoring::simple(-5, -5, 0, 0);
    Alignment a = strand::align("A", "A", s, AlignMode::global);
    CHECK(a.score == 0);
    CHECK(a.ops == ops({AlignOp::ins, AlignOp::del}));
}

TEST_CASE("global score is symmetric in its arguments") {
    std::mt19937_64 rng(81);
    Scoring s = Scoring::simple(2, -1, -3, -1);
    for (int it = 0; it < 20; ++it) {
        std::string x = oracle::random_string(rng, rng() % 8, "ACGT");
        std::string y = oracle::random_string(rng, rng() % 8, "ACGT");
        CHECK(strand::align(x, y, s, AlignMode::global).score ==
              strand::align(y, x, s, AlignMode::global).score);
    }
}

TEST_CASE("the cubic reference agrees with exhaustive enumeration on tiny inputs") {
    std::vector<std::string> words = {""};
    for (std::size_t len = 1; len <= 3; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : words)
            if (w.size() == len - 1)
                for (char c : {'A', 'C'}) next.push_back(w + c);
        words.insert(words.end(), next.begin(), next.end());
    }
    const Scoring scorings[] = {kUnit, Scoring::simple(2, -3, -4, -2), Scoring::simple(-1, -2, -1, -1)};
    for (const Scoring& s : scorings)
        for (AlignMode mode : {AlignMode::global, AlignMode::semiglobal, AlignMode::local})
            for (const std::string& x : words)
                for (const std::string& y : words)
                    CHECK(oracle::best_score(x, y, s, mode) == oracle::enumerate_best(x, y, s, mode));
}

TEST_CASE("alignments are optimal and internally consistent on random inputs") {
    std::mt19937_64 rng(82);
    const Scoring scorings[] = {kUnit, Scoring::simple(2, -3, -5, -2), Scoring::simple(1, -1, 0, 0),
                                Scoring::simple(-1, -2, -1, -1)};
    for (int it = 0; it < 60; ++it) {
        std::string x = oracle::random_string(rng, rng() % 9, "ACGT");
        std::string y = oracle::random_string(rng, rng() % 9, "ACGT");
        const Scoring& s = scorings[it % 4];
        for (AlignMode mode : {AlignMode::global, AlignMode::semiglobal, AlignMode::local}) {
            CAPTURE(x);
            CAPTURE(y);
            CAPTURE(static_cast<int>(mode));
            Alignment a = strand::align(x, y, s, mode);
            CHECK(a.score == oracle::best_score(x, y, s, mode));

            oracle::Rescore r = oracle::rescore(a, x, y, s);
            CHECK(r.ok);
            CHECK(r.score == a.score);

            CHECK(a.x_start <= a.x_end);
            CHECK(a.y_start <= a.y_end);
            CHECK(a.x_end <= x.size());
            CHECK(a.y_end <= y.size());
            if (mode == AlignMode::global) {
                CHECK(a.x_start == 0);
                CHECK(a.x_end == x.size());
                CHECK(a.y_start == 0);
                CHECK(a.y_end == y.size());
            }
            if (mode == AlignMode::semiglobal) {
                CHECK(a.x_start == 0);
                CHECK(a.x_end == x.size());
            }
            if (mode == AlignMode::local) CHECK(a.score >= 0);
        }
    }
}
