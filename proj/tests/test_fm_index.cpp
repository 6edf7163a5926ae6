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

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "strand/alphabet.hpp"
#include "strand/fm_index.hpp"
#include "strand/suffix_array.hpp"

#include "oracles.hpp"

using strand::Alphabet;
using strand::BiInterval;
using strand::FmdIndex;
using strand::FmIndex;
using strand::SearchInterval;
using strand::Smem;
using strand::SuffixArray;

namespace {

FmIndex banana_index(std::size_t rate = 3) {
    std::string text = "banana$";
    return FmIndex(strand::bwt(text, strand::suffix_array(text)), rate, Alphabet("abn"));
}

}  // namespace

TEST_CASE("backward search on banana") {
    FmIndex fm = banana_index();
    SuffixArray sa = strand::suffix_array("banana$");

    SearchInterval ana = fm.backward_search("ana");
    CHECK(ana == SearchInterval{2, 4});
    CHECK(ana.size() == 2);
    const std::vector<std::size_t> ana_pos = {3, 1};
    CHECK(ana.occ(sa) == ana_pos);

    CHECK(fm.backward_search("nana") == SearchInterval{6, 7});
    const std::vector<std::size_t> b_pos = {0};
    CHECK(fm.backward_search("b").occ(sa) == b_pos);

    SearchInterval all = fm.backward_search("");
    CHECK(all == SearchInterval{0, 7});
    std::vector<std::size_t> every = all.occ(sa);
    std::sort(every.begin(), every.end());
    const std::vector<std::size_t> want = {0, 1, 2, 3, 4, 5, 6};
    CHECK(every == want);
}

TEST_CASE("backward search distinguishes absent from illegal patterns") {
    std::string text = "banana$";
    std::string b = strand::bwt(text, strand::suffix_array(text));
    FmIndex wide(b, 3, Alphabet("abnz"));
    CHECK(wide.backward_search("zzz").empty());
    CHECK(wide.backward_search("nanab").empty());

    FmIndex narrow(b, 3, Alphabet("abn"));
    CHECK_THROWS_AS(narrow.backward_search("zzz"), strand::SymbolNotInAlphabet);
    CHECK_THROWS_AS(narrow.backward_search("banana$"), strand::SymbolNotInAlphabet);
}

TEST_CASE("backward search is independent of the sampling rate") {
    SearchInterval base = banana_index(1).backward_search("an");
    for (std::size_t rate : {std::size_t{3}, std::size_t{32}}) {
        CHECK(banana_index(rate).backward_search("an") == base);
    }
}

TEST_CASE("interval accessors") {
    SuffixArray sa = strand::suffix_array("banana$");
    CHECK(SearchInterval{3, 3}.empty());
    CHECK(SearchInterval{3, 3}.size() == 0);
    CHECK_THROWS_AS((SearchInterval{0, 8}.occ(sa)), strand::IndexTextMismatch);
    CHECK_THROWS_AS((SearchInterval{5, 2}.occ(sa)), strand::IndexTextMismatch);
}

TEST_CASE("backward search finds every occurrence on random texts") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 25; ++it) {
        std::string text = oracle::random_string(rng, 30 + rng() % 170, "acgt");
        text += '$';
        std::string b = strand::bwt(text, strand::suffix_array(text));
        SuffixArray sa = strand::suffix_array(text);
        FmIndex fm(b, it % 2 ? 1 : 32, Alphabet("acgt"));
        for (int q = 0; q < 8; ++q) {
            std::string pattern = oracle::random_string(rng, 1 + rng() % 5, "acgt");
            std::vector<std::size_t> got = fm.backward_search(pattern).occ(sa);
            std::sort(got.begin(), got.end());
            CHECK(got == oracle::scan_positions(pattern, text));
        }
    }
}

TEST_CASE("bidirectional index over both strands") {
    FmdIndex fmd("ACGT");
    CHECK(fmd.text_len() == 4);
    CHECK(fmd.size() == 10);

    BiInterval a = fmd.init('A');
    CHECK(a.size == 2);
    CHECK(a.match_len == 1);
    CHECK(a.forward().size() == 2);
    CHECK(a.reverse().size() == 2);

    FmdIndex empty("");
    CHECK(empty.text_len() == 0);
    CHECK(empty.init('A').empty());

    CHECK_THROWS_AS(FmdIndex("ACGU"), strand::SymbolNotInAlphabet);
    CHECK_THROWS_AS(FmdIndex("acgt"), strand::SymbolNotInAlphabet);
    CHECK_THROWS_AS(fmd.init('$'), strand::SymbolNotInAlphabet);
}

TEST_CASE("extension intervals count occurrences on both strands") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 20; ++it) {
        std::string text = oracle::random_string(rng, 20 + rng() % 80, it % 3 ? "ACGT" : "ACGTN");
        FmdIndex fmd(text);
        std::string concat = text + '$' + strand::revcomp(text) + '$';

        std::string cur(1, text[rng() % text.size()]);
        BiInterval iv = fmd.init(static_cast<unsigned char>(cur[0]));
        for (int step = 0; step < 12 && !iv.empty(); ++step) {
            CHECK(iv.match_len == cur.size());
            CHECK(iv.size == oracle::scan_positions(cur, concat).size());
            CHECK(iv.forward() == fmd.fm().backward_search(cur));
            CHECK(iv.reverse() == fmd.fm().backward_search(strand::revcomp(cur)));

            char c = "ACGT"[rng() % 4];
            if (rng() % 2) {
                iv = fmd.backward_ext(iv, static_cast<unsigned char>(c));
                cur.insert(cur.begin(), c);
            } else {
                iv = fmd.forward_ext(iv, static_cast<unsigned char>(c));
                cur.push_back(c);
            }
        }
        if (iv.empty()) CHECK(oracle::scan_positions(cur, concat).empty());
    }
}

TEST_CASE("supermaximal matches on worked examples") {
    FmdIndex fmd("ACGTACGT");
    std::vector<Smem> got = fmd.smems("ACGT", 0);
    REQUIRE(got.size() == 1);
    CHECK(got[0].pattern_start == 0);
    CHECK(got[0].pattern_end == 4);
    CHECK(got[0].interval.size == 4);
    CHECK(got[0].interval.match_len == 4);

    for (std::size_t start : {std::size_t{0}, std::size_t{3}, std::size_t{7}}) {
        std::vector<Smem> whole = fmd.smems("ACGTACGT", start);
        REQUIRE(whole.size() == 1);
        CHECK(whole[0].pattern_start == 0);
        CHECK(whole[0].pattern_end == 8);
    }
}

TEST_CASE("supermaximal matches see the reverse strand") {
    FmdIndex fmd("GGAAAACC");
    std::vector<Smem> got = fmd.smems("TTTT", 1);
    REQUIRE(got.size() == 1);
    CHECK(got[0].pattern_start == 0);
    CHECK(got[0].pattern_end == 4);
}

TEST_CASE("supermaximal match query bounds") {
    FmdIndex fmd("ACGT");
    CHECK_THROWS_AS(fmd.smems("ACGT", 4), strand::OutOfBounds);
    CHECK_THROWS_AS(fmd.smems("", 0), strand::OutOfBounds);
    CHECK_THROWS_AS(fmd.smems("ACGU", 0), strand::SymbolNotInAlphabet);
    CHECK(fmd.smems("TTTT", 0).empty() == false);
}

TEST_CASE("supermaximal matches agree with exhaustive enumeration") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 15; ++it) {
        std::string text = oracle::random_string(rng, 20 + rng() % 60, "ACGT");
        std::string pattern = oracle::random_string(rng, 4 + rng() % 12, "ACGT");
        FmdIndex fmd(text);

        std::set<oracle::Span> found;
        for (std::size_t start = 0; start < pattern.size(); ++start) {
            for (const Smem& s : fmd.smems(pattern, start)) {
                CHECK(s.pattern_start <= start);
                CHECK(start < s.pattern_end);
                CHECK(s.interval.size > 0);
                found.insert({s.pattern_start, s.pattern_end});
            }
        }
        std::vector<oracle::Span> got(found.begin(), found.end());
        CHECK(got == oracle::brute_smems(pattern, text));
    }
}
