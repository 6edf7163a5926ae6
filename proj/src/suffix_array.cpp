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

#include "strand/suffix_array.hpp"

#include <algorithm>

namespace strand {
namespace {

constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);

struct Buckets {
    std::vector<std::size_t> starts;
    std::vector<std::size_t> ends;
};

Buckets make_buckets(const std::vector<std::uint32_t>& s, std::size_t sigma) {
    std::vector<std::size_t> count(sigma, 0);
    for (std::uint32_t c : s) ++count[c];
    Buckets b{std::vector<std::size_t>(sigma), std::vector<std::size_t>(sigma)};
    std::size_t acc = 0;
    for (std::size_t c = 0; c < sigma; ++c) {
        b.starts[c] = acc;
        acc += count[c];
        b.ends[c] = acc;
    }
    return b;
}

// Induced sorting: seed entries must already sit in `sa`, everything else
// kEmpty. L pass fills bucket heads left to right, S pass fills tails right
// to left. Stale seeds are harmless in the S pass because an LMS position's
// predecessor is L-type by definition.
void induce(const std::vector<std::uint32_t>& s, const std::vector<bool>& is_s,
            const Buckets& b, std::vector<std::size_t>& sa) {
    const std::size_t n = s.size();
    std::vector<std::size_t> head = b.starts;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = sa[i];
        if (j == kEmpty || j == 0) continue;
        if (!is_s[j - 1]) sa[head[s[j - 1]]++] = j - 1;
    }
    std::vector<std::size_t> tail = b.ends;
    for (std::size_t i = n; i-- > 0;) {
        std::size_t j = sa[i];
        if (j == kEmpty || j == 0) continue;
        if (is_s[j - 1]) sa[--tail[s[j - 1]]] = j - 1;
    }
}

}  // namespace

namespace detail {

std::vector<std::size_t> sais(const std::vector<std::uint32_t>& s, std::size_t sigma) {
    const std::size_t n = s.size();
    std::vector<std::size_t> sa(n, kEmpty);
    if (n == 0) return sa;
    if (n == 1) {
        sa[0] = 0;
        return sa;
    }

    std::vector<bool> is_s(n);
    is_s[n - 1] = true;
    for (std::size_t i = n - 1; i-- > 0;)
        is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);

    auto is_lms = [&](std::size_t i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

    std::vector<std::size_t> lms;  // in text order
    for (std::size_t i = 1; i < n; ++i)
        if (is_lms(i)) lms.push_back(i);

    const Buckets buckets = make_buckets(s, sigma);

    // Round 1: seed LMS suffixes in text order, induce; this sorts the
    // LMS substrings even though the seeds were unordered.
    {
        std::vector<std::size_t> tail = buckets.ends;
        for (auto it = lms.rbegin(); it != lms.rend(); ++it) sa[--tail[s[*it]]] = *it;
    }
    induce(s, is_s, buckets, sa);

    std::vector<std::size_t> sorted_lms;
    sorted_lms.reserve(lms.size());
    for (std::size_t i = 0; i < n; ++i)
        if (sa[i] != kEmpty && is_lms(sa[i])) sorted_lms.push_back(sa[i]);

    // Name LMS substrings (span runs to the next LMS position, inclusive).
    auto lms_equal = [&](std::size_t a, std::size_t b2) {
        for (std::size_t d = 0;; ++d) {
            std::size_t pa = a + d, pb = b2 + d;
            if (pa >= n || pb >= n) return false;
            if (s[pa] != s[pb]) return false;
            bool ea = d > 0 && is_lms(pa);
            bool eb = d > 0 && is_lms(pb);
            if (ea && eb) return true;
            if (ea != eb) return false;
        }
    };

    std::vector<std::size_t> name_of(n, kEmpty);
    std::size_t names = 0;
    std::size_t prev = kEmpty;
    for (std::size_t pos : sorted_lms) {
        if (prev == kEmpty || !lms_equal(prev, pos)) ++names;
        name_of[pos] = names - 1;
        prev = pos;
    }

    std::vector<std::size_t> lms_sorted_final;
    if (names == lms.size()) {
        lms_sorted_final = sorted_lms;  // all distinct: substring order is suffix order
    } else {
        std::vector<std::uint32_t> reduced(lms.size());
        for (std::size_t i = 0; i < lms.size(); ++i)
            reduced[i] = static_cast<std::uint32_t>(name_of[lms[i]]);
        std::vector<std::size_t> sa1 = sais(reduced, names);
        lms_sorted_final.resize(lms.size());
        for (std::size_t i = 0; i < lms.size(); ++i) lms_sorted_final[i] = lms[sa1[i]];
    }

    // Round 2: seed the now fully sorted LMS suffixes and induce the final order.
    std::fill(sa.begin(), sa.end(), kEmpty);
    {
        std::vector<std::size_t> tail = buckets.ends;
        for (auto it = lms_sorted_final.rbegin(); it != lms_sorted_final.rend(); ++it)
            sa[--tail[s[*it]]] = *it;
    }
    induce(s, is_s, buckets, sa);
    return sa;
}

}  // namespace detail

namespace {

void check_sentinel(std::string_view text, char sentinel) {
    if (text.empty()) throw InvalidSentinel("text is empty, expected a sentinel-terminated text");
    if (text.back() != sentinel)
        throw InvalidSentinel("text does not end with the sentinel byte");
    const unsigned char s = static_cast<unsigned char>(sentinel);
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == s) throw InvalidSentinel("sentinel occurs before the end of the text");
        if (c < s) throw InvalidSentinel("sentinel is not the smallest byte of the text");
    }
}

}  // namespace

SuffixArray suffix_array(std::string_view text, char sentinel) {
    check_sentinel(text, sentinel);
    // Map bytes to dense ranks so bucket arrays stay tight for any alphabet.
    std::array<std::uint32_t, 256> rank{};
    std::array<bool, 256> present{};
    for (char ch : text) present[static_cast<unsigned char>(ch)] = true;
    std::uint32_t sigma = 0;
    for (int c = 0; c < 256; ++c)
        if (present[c]) rank[c] = sigma++;
    std::vector<std::uint32_t> s(text.size());
    for (std::size_t i = 0; i < text.size(); ++i)
        s[i] = rank[static_cast<unsigned char>(text[i])];
    return detail::sais(s, sigma);
}

std::string bwt(std::string_view text, const SuffixArray& sa) {
    if (sa.size() != text.size())
        throw IndexTextMismatch("suffix array length does not match text length");
    const std::size_t n = text.size();
    std::string out(n, '\0');
    for (std::size_t i = 0; i < n; ++i) out[i] = text[(sa[i] + n - 1) % n];
    return out;
}

std::string invert_bwt(std::string_view b, char sentinel) {
    const std::size_t n = b.size();
    if (n == 0) throw InvalidSentinel("transform is empty, expected one sentinel byte");
    if (std::count(b.begin(), b.end(), sentinel) != 1)
        throw InvalidSentinel("transform must contain the sentinel exactly once");

    std::array<std::size_t, 256> count{};
    for (char ch : b) ++count[static_cast<unsigned char>(ch)];
    std::array<std::size_t, 256> less{};
    for (int c = 1; c < 256; ++c) less[c] = less[c - 1] + count[c - 1];

    // lf[i] = row of the rotation one position to the left of row i
    std::vector<std::size_t> lf(n);
    std::array<std::size_t, 256> seen{};
    for (std::size_t i = 0; i < n; ++i) {
        unsigned char c = static_cast<unsigned char>(b[i]);
        lf[i] = less[c] + seen[c];
        ++seen[c];
    }

    std::string out(n, '\0');
    out[n - 1] = sentinel;
    std::size_t row = 0;  // row 0 is the rotation starting at the sentinel
    for (std::size_t pos = n - 1; pos-- > 0;) {
        out[pos] = b[row];
        row = lf[row];
    }
    if (b[row] != sentinel)
        throw InvalidSentinel("byte sequence is not a Burrows-Wheeler transform");
    return out;
}

LessTable::LessTable(std::string_view b, const Alphabet& a, char sentinel) {
    std::array<std::size_t, 256> count{};
    for (std::size_t i = 0; i < b.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(b[i]);
        if (c != static_cast<unsigned char>(sentinel) && !a.contains(c))
            throw SymbolNotInAlphabet(c, i);
        ++count[c];
    }
    for (int c = 1; c < 256; ++c) less_[c] = less_[c - 1] + count[c - 1];
}

OccTable::OccTable(std::string b, std::size_t sampling_rate, const Alphabet& a, char sentinel)
    : bwt_(std::move(b)), k_(sampling_rate) {
    if (k_ < 1) throw OutOfBounds("sampling rate must be at least 1");
    slot_.fill(-1);
    slot_[static_cast<unsigned char>(sentinel)] = 0;
    nsym_ = 1;
    for (unsigned char c : a.symbols()) {
        if (slot_[c] < 0) slot_[c] = static_cast<std::int16_t>(nsym_++);
    }
    const std::size_t n = bwt_.size();
    cp_.assign((n / k_ + 1) * nsym_, 0);
    std::vector<std::size_t> running(nsym_, 0);
    std::size_t row = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        if (i % k_ == 0) {
            std::copy(running.begin(), running.end(), cp_.begin() + row * nsym_);
            ++row;
        }
        if (i == n) break;
        unsigned char c = static_cast<unsigned char>(bwt_[i]);
        if (slot_[c] < 0) throw SymbolNotInAlphabet(c, i);
        ++running[slot_[c]];
    }
}

std::size_t OccTable::occ(std::ptrdiff_t r, unsigned char c) const {
    if (r < 0) return 0;
    const std::size_t n = bwt_.size();
    std::size_t pos = static_cast<std::size_t>(r) + 1;
    if (pos > n)
        throw OutOfBounds("occurrence query at row " + std::to_string(r) + " of " +
                          std::to_string(n));
    if (slot_[c] < 0) return 0;
    std::size_t cp_row = pos / k_;
    std::size_t count = cp_[cp_row * nsym_ + static_cast<std::size_t>(slot_[c])];
    for (std::size_t i = cp_row * k_; i < pos; ++i)
        if (static_cast<unsigned char>(bwt_[i]) == c) ++count;
    return count;
}

}  // namespace strand
