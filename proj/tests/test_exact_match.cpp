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

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "strand/exact_match.hpp"

#include "oracles.hpp"

using strand::Algorithm;

namespace {

constexpr Algorithm kAll[] = {Algorithm::naive, Algorithm::kmp,  Algorithm::horspool,
                              Algorithm::bndm,  Algorithm::bom,  Algorithm::shift_and};

}  // namespace

TEST_CASE("kmp failure function") {
    strand::KmpMatcher m("abab");
    const std::vector<std::size_t> want = {0, 0, 0, 1, 2};
    CHECK(m.failure() == want);

    strand::KmpMatcher aaa("aaa");
    const std::vector<std::size_t> want2 = {0, 0, 1, 2};
    CHECK(aaa.failure() == want2);
}

TEST_CASE("horspool shift table") {
    strand::HorspoolMatcher m("abc");
    CHECK(m.shift('a') == 2);
    CHECK(m.shift('b') == 1);
    CHECK(m.shift('c') == 3);
    CHECK(m.shift('z') == 3);
    for (int c = 0; c < 256; ++c) {
        CHECK(m.shift(static_cast<unsigned char>(c)) >= 1);
        CHECK(m.shift(static_cast<unsigned char>(c)) <= 3);
    }
}

TEST_CASE("factor oracle transitions") {
    strand::BomMatcher m("abcab");
    CHECK(m.transition(0, 'b') >= 0);
    CHECK(m.transition(0, 'z') == -1);
}

TEST_CASE("all matchers find overlapping occurrences") {
    for (Algorithm a : kAll) {
        CAPTURE(strand::algorithm_name(a));
        const std::vector<std::size_t> aba = {0, 2};
        CHECK(strand::find_all(a, "aba", "ababab") == aba);
        const std::vector<std::size_t> aa = {0, 1, 2};
        CHECK(strand::find_all(a, "aa", "aaaa") == aa);
        const std::vector<std::size_t> self = {0};
        CHECK(strand::find_all(a, "banana", "banana") == self);
        CHECK(strand::find_all(a, "needle", "short").empty());
        CHECK(strand::find_all(a, "x", "").empty());
        CHECK(strand::count_matches(a, "aa", "aaaa") == 3);
    }
}

TEST_CASE("empty patterns are rejected everywhere") {
    CHECK_THROWS_AS(strand::NaiveMatcher(""), strand::EmptyPattern);
    CHECK_THROWS_AS(strand::KmpMatcher(""), strand::EmptyPattern);
    CHECK_THROWS_AS(strand::HorspoolMatcher(""), strand::EmptyPattern);
    CHECK_THROWS_AS(strand::BndmMatcher(""), strand::EmptyPattern);
    CHECK_THROWS_AS(strand::BomMatcher(""), strand::EmptyPattern);
    CHECK_THROWS_AS(strand::ShiftAndMatcher(""), strand::EmptyPattern);
    CHECK_THROWS_AS(strand::find_all(Algorithm::kmp, "", "abc"), strand::EmptyPattern);
}

TEST_CASE("word-parallel matchers cap the pattern length") {
    std::string p64(64, 'a');
    std::string p65(65, 'a');
    CHECK_THROWS_AS(strand::BndmMatcher{p65}, strand::PatternTooLong);
    CHECK_THROWS_AS(strand::ShiftAndMatcher{p65}, strand::PatternTooLong);

    std::string text = p64 + p64;
    CHECK(strand::find_all(Algorithm::bndm, p64, text).size() == 65);
    CHECK(strand::find_all(Algorithm::shift_and, p64, text).size() == 65);
    CHECK(strand::find_all(Algorithm::naive, p65, text).size() == 64);
    CHECK(strand::find_all(Algorithm::kmp, p65, text).size() == 64);
    CHECK(strand::find_all(Algorithm::horspool, p65, text).size() == 64);
    CHECK(strand::find_all(Algorithm::bom, p65, text).size() == 64);
}

TEST_CASE("all matchers agree with a window scan on random instances") {
    std::mt19937_64 rng(61);
    const std::string_view alphabets[] = {"ab", "ACGT", "abcdefghijklmnopqrstuvwxyz"};
    for (int it = 0; it < 120; ++it) {
        std::string_view sigma = alphabets[it % 3];
        std::string text = oracle::random_string(rng, rng() % 300, sigma);
        std::string pattern = oracle::random_string(rng, 1 + rng() % 8, sigma);
        if (it % 4 == 0 && text.size() > 10) {
            std::size_t at = rng() % (text.size() - pattern.size());
            text.replace(at, pattern.size(), pattern);
        }
        std::vector<std::size_t> want = oracle::scan_positions(pattern, text);
        for (Algorithm a : kAll) {
            CAPTURE(strand::algorithm_name(a));
            CAPTURE(pattern);
            CAPTURE(text);
            CHECK(strand::find_all(a, pattern, text) == want);
        }
    }
}

TEST_CASE("kmp performs at most two comparisons per text symbol") {
    std::mt19937_64 rng(62);
    for (int it = 0; it < 20; ++it) {
        std::string text = oracle::random_string(rng, 500, "ab");
        std::string pattern = oracle::random_string(rng, 1 + rng() % 6, "ab");
        strand::KmpMatcher m(pattern);
        strand::KmpScan scan = m.scan(text);
        while (scan.next()) {
        }
        CHECK(scan.comparisons() <= 2 * scan.cursor());
        CHECK(scan.cursor() <= text.size());
    }
}

TEST_CASE("scans stop advancing once a match is consumed") {
    std::string text = "abc" + std::string(50000, 'x');

    strand::NaiveMatcher naive("abc");
    strand::KmpMatcher kmp("abc");
    strand::HorspoolMatcher horspool("abc");
    strand::BndmMatcher bndm("abc");
    strand::BomMatcher bom("abc");
    strand::ShiftAndMatcher shift_and("abc");

    auto check_lazy = [&](auto scan) {
        REQUIRE(scan.next() == std::size_t{0});
        CHECK(scan.cursor() <= 64);
    };
    check_lazy(naive.scan(text));
    check_lazy(kmp.scan(text));
    check_lazy(horspool.scan(text));
    check_lazy(bndm.scan(text));
    check_lazy(bom.scan(text));
    check_lazy(shift_and.scan(text));
}

TEST_CASE("match ranges iterate lazily") {
    strand::KmpMatcher m("ab");
    auto range = m.find_all("abxabxab");
    std::vector<std::size_t> got;
    for (std::size_t pos : range) got.push_back(pos);
    const std::vector<std::size_t> want = {0, 3, 6};
    CHECK(got == want);

    auto range2 = m.find_all("abxabxab");
    CHECK(range2.to_vector() == want);
}

TEST_CASE("algorithm names round-trip") {
    CHECK(strand::algorithm_from_name("naive") == Algorithm::naive);
    CHECK(strand::algorithm_from_name("kmp") == Algorithm::kmp);
    CHECK(strand::algorithm_from_name("horspool") == Algorithm::horspool);
    CHECK(strand::algorithm_from_name("bndm") == Algorithm::bndm);
    CHECK(strand::algorithm_from_name("bom") == Algorithm::bom);
    CHECK(strand::algorithm_from_name("shift-and") == Algorithm::shift_and);
    CHECK(strand::algorithm_from_name("shift_and") == Algorithm::shift_and);
    CHECK_THROWS_AS(strand::algorithm_from_name("boyer-moore"), strand::Error);

    for (Algorithm a : kAll) CHECK(strand::algorithm_from_name(std::string(strand::algorithm_name(a))) == a);
}
