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

#include "strand/fm_index.hpp"

#include <algorithm>

namespace strand {

std::vector<std::size_t> SearchInterval::occ(const SuffixArray& sa) const {
    if (upper > sa.size() || lower > upper)
        throw IndexTextMismatch("interval does not fit the suffix array");
    return std::vector<std::size_t>(sa.begin() + static_cast<std::ptrdiff_t>(lower),
                                    sa.begin() + static_cast<std::ptrdiff_t>(upper));
}

FmIndex::FmIndex(std::string b, std::size_t sampling_rate, Alphabet a, char sentinel)
    : occ_(std::move(b), sampling_rate, a, sentinel),
      less_(occ_.bwt(), a, sentinel),
      alphabet_(std::move(a)),
      sentinel_(sentinel) {}

SearchInterval FmIndex::backward_search(std::string_view pattern) const {
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(pattern[i]);
        if (!alphabet_.contains(c)) throw SymbolNotInAlphabet(c, i);
    }
    SearchInterval iv{0, size()};
    for (std::size_t i = pattern.size(); i-- > 0;) {
        unsigned char c = static_cast<unsigned char>(pattern[i]);
        iv.lower = less_[c] + occ_.occ(static_cast<std::ptrdiff_t>(iv.lower) - 1, c);
        iv.upper = less_[c] + occ_.occ(static_cast<std::ptrdiff_t>(iv.upper) - 1, c);
        if (iv.empty()) return {iv.lower, iv.lower};
    }
    return iv;
}

namespace {

constexpr std::string_view kDnaSymbols = "ACGNT";  // ascending byte order

bool is_dna_symbol(unsigned char c) {
    return c == 'A' || c == 'C' || c == 'G' || c == 'N' || c == 'T';
}

}  // namespace

unsigned char FmdIndex::check_symbol(unsigned char c, std::size_t pos) {
    if (!is_dna_symbol(c)) throw SymbolNotInAlphabet(c, pos);
    return c;
}

FmIndex FmdIndex::build(std::string_view text, std::size_t sampling_rate, SuffixArray& sa_out,
                        std::size_t& len_out) {
    for (std::size_t i = 0; i < text.size(); ++i)
        check_symbol(static_cast<unsigned char>(text[i]), i);
    len_out = text.size();

    std::string concat;
    concat.reserve(2 * text.size() + 2);
    concat.append(text);
    concat.push_back('$');
    concat.append(revcomp(text));
    concat.push_back('$');

    // The two sentinel bytes get positionally distinct ranks (final one
    // smallest) so the integer string meets the unique-minimum contract.
    // Their relative order never affects intervals of sentinel-free patterns.
    const std::size_t n = concat.size();
    std::vector<std::uint32_t> ranks(n);
    for (std::size_t i = 0; i < n; ++i) {
        switch (concat[i]) {
            case '$': ranks[i] = i + 1 == n ? 0 : 1; break;
            case 'A': ranks[i] = 2; break;
            case 'C': ranks[i] = 3; break;
            case 'G': ranks[i] = 4; break;
            case 'N': ranks[i] = 5; break;
            case 'T': ranks[i] = 6; break;
        }
    }
    sa_out = detail::sais(ranks, 7);

    std::string b(n, '\0');
    for (std::size_t i = 0; i < n; ++i) b[i] = concat[(sa_out[i] + n - 1) % n];
    return FmIndex(std::move(b), sampling_rate, Alphabet(kDnaSymbols), '$');
}

FmdIndex::FmdIndex(std::string_view text, std::size_t sampling_rate)
    : fm_(build(text, sampling_rate, sa_, text_len_)) {}

BiInterval FmdIndex::init(unsigned char c) const {
    check_symbol(c, SymbolNotInAlphabet::npos);
    const std::size_t n = fm_.size();
    const LessTable& less = fm_.less();
    const OccTable& occ = fm_.occ_table();
    BiInterval iv;
    iv.lower = less[c];
    iv.lower_rev = less[complement(c)];
    iv.size = occ.occ(static_cast<std::ptrdiff_t>(n) - 1, c);
    iv.match_len = 1;
    return iv;
}

BiInterval FmdIndex::backward_ext(const BiInterval& iv, unsigned char c) const {
    check_symbol(c, SymbolNotInAlphabet::npos);
    const LessTable& less = fm_.less();
    const OccTable& occ = fm_.occ_table();
    const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(iv.lower) - 1;
    const std::ptrdiff_t hi = lo + static_cast<std::ptrdiff_t>(iv.size);

    auto count_in = [&](unsigned char x) { return occ.occ(hi, x) - occ.occ(lo, x); };

    // Occurrences of the current match grouped by preceding symbol; the
    // sentinel group covers matches at the very front of either strand.
    std::size_t sizes[5];
    for (std::size_t i = 0; i < 5; ++i) sizes[i] = count_in(kDnaSymbols[i]);
    std::size_t sentinel_count = count_in('$');

    BiInterval out;
    out.size = 0;
    out.match_len = iv.match_len + 1;
    out.lower = less[c] + occ.occ(lo, c);

    // Reverse-strand rows group by the symbol following the reverse
    // complement, in ascending byte order; following symbol y corresponds
    // to preceding symbol complement(y) on this strand. Iterating y over
    // A,C,G,N,T therefore walks preceding symbols T,G,C,N,A.
    static constexpr unsigned char kCompOrder[5] = {'T', 'G', 'C', 'N', 'A'};
    static constexpr std::size_t kCompIdx[5] = {4, 2, 1, 3, 0};  // index into sizes
    std::size_t acc = iv.lower_rev + sentinel_count;
    for (std::size_t i = 0; i < 5; ++i) {
        if (kCompOrder[i] == c) {
            out.lower_rev = acc;
            out.size = sizes[kCompIdx[i]];
            break;
        }
        acc += sizes[kCompIdx[i]];
    }
    return out;
}

BiInterval FmdIndex::forward_ext(const BiInterval& iv, unsigned char c) const {
    BiInterval swapped{iv.lower_rev, iv.lower, iv.size, iv.match_len};
    BiInterval r = backward_ext(swapped, complement(c));
    return BiInterval{r.lower_rev, r.lower, r.size, r.match_len};
}

std::vector<Smem> FmdIndex::smems(std::string_view pattern, std::size_t start) const {
    if (start >= pattern.size())
        throw OutOfBounds("query position " + std::to_string(start) + " out of range");
    for (std::size_t i = 0; i < pattern.size(); ++i)
        check_symbol(static_cast<unsigned char>(pattern[i]), i);

    const std::size_t m = pattern.size();
    std::vector<Smem> out;
    BiInterval ik = init(static_cast<unsigned char>(pattern[start]));
    if (ik.empty()) return out;

    struct Snap {
        BiInterval iv;
        std::size_t end;
    };

    // Forward pass: snapshot the interval whenever an extension shrinks it.
    std::vector<Snap> prev, curr;
    std::size_t i = start + 1;
    for (; i < m; ++i) {
        BiInterval ok = forward_ext(ik, static_cast<unsigned char>(pattern[i]));
        if (ok.size != ik.size) {
            prev.push_back({ik, i});
            if (ok.size == 0) break;
        }
        ik = ok;
    }
    if (i == m) prev.push_back({ik, m});
    std::reverse(prev.begin(), prev.end());  // longest match first

    // Backward pass: grow every snapshot leftwards in lockstep; a snapshot
    // that cannot grow past position j is supermaximal unless a longer one
    // also reaches j or an earlier report already covers it.
    for (std::ptrdiff_t j = static_cast<std::ptrdiff_t>(start) - 1; j >= -1; --j) {
        curr.clear();
        for (const Snap& p : prev) {
            BiInterval ok;
            if (j >= 0)
                ok = backward_ext(p.iv, static_cast<unsigned char>(pattern[j]));
            if (j < 0 || ok.empty()) {
                if (curr.empty()) {
                    std::size_t s = static_cast<std::size_t>(j + 1);
                    if (out.empty() || s < out.back().pattern_start)
                        out.push_back({s, p.end, p.iv});
                }
            } else if (curr.empty() || ok.size != curr.back().iv.size) {
                curr.push_back({ok, p.end});
            }
        }
        if (curr.empty()) break;
        std::swap(curr, prev);
    }

    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace strand
