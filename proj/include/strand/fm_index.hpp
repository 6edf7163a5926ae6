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

#ifndef STRAND_FM_INDEX_HPP
#define STRAND_FM_INDEX_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "strand/alphabet.hpp"
#include "strand/error.hpp"
#include "strand/suffix_array.hpp"

namespace strand {

/// Half-open range [lower, upper) of suffix-array rows.
struct SearchInterval {
    std::size_t lower = 0;
    std::size_t upper = 0;

    std::size_t size() const noexcept { return upper - lower; }
    bool empty() const noexcept { return lower >= upper; }

    /// Text positions of the matches, in suffix-array row order.
    std::vector<std::size_t> occ(const SuffixArray& sa) const;

    bool operator==(const SearchInterval&) const = default;
};

/// FM-index: backward search over a Burrows-Wheeler transform.
class FmIndex {
  public:
    /// `b` is the transform of some sentinel-terminated text over `a`.
    FmIndex(std::string b, std::size_t sampling_rate, Alphabet a, char sentinel = '$');

    std::size_t size() const noexcept { return occ_.size(); }
    std::string_view bwt() const noexcept { return occ_.bwt(); }
    const LessTable& less() const noexcept { return less_; }
    const OccTable& occ_table() const noexcept { return occ_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    char sentinel() const noexcept { return sentinel_; }

    /// Suffix-array interval of rows whose suffixes start with `pattern`,
    /// computed right to left. The empty pattern yields [0, n).
    SearchInterval backward_search(std::string_view pattern) const;

  private:
    OccTable occ_;
    LessTable less_;
    Alphabet alphabet_;
    char sentinel_;
};

/// Bidirectional suffix-array interval: `lower` locates the current match,
/// `lower_rev` its reverse complement, both of width `size`. `match_len`
/// tracks how many symbols the interval currently spans.
struct BiInterval {
    std::size_t lower = 0;
    std::size_t lower_rev = 0;
    std::size_t size = 0;
    std::size_t match_len = 0;

    bool empty() const noexcept { return size == 0; }
    SearchInterval forward() const noexcept { return {lower, lower + size}; }
    SearchInterval reverse() const noexcept { return {lower_rev, lower_rev + size}; }

    bool operator==(const BiInterval&) const = default;
};

/// A supermaximal exact match of a query substring, half-open in the query.
struct Smem {
    std::size_t pattern_start = 0;
    std::size_t pattern_end = 0;
    BiInterval interval;
};

/// Bidirectional index over a DNA text and its reverse complement,
/// indexed as text + '$' + revcomp(text) + '$'.
///
/// 'N' is an ordinary fifth symbol matching only itself.
class FmdIndex {
  public:
    explicit FmdIndex(std::string_view text, std::size_t sampling_rate = 3);

    std::size_t text_len() const noexcept { return text_len_; }
    /// Length of the indexed concatenation (2 * text_len + 2).
    std::size_t size() const noexcept { return fm_.size(); }
    const SuffixArray& sa() const noexcept { return sa_; }
    const FmIndex& fm() const noexcept { return fm_; }

    /// Interval of a single symbol, counting both strands.
    BiInterval init(unsigned char c) const;

    /// Extend the match one symbol to the left (new first symbol c).
    BiInterval backward_ext(const BiInterval& iv, unsigned char c) const;

    /// Extend the match one symbol to the right (new last symbol c).
    BiInterval forward_ext(const BiInterval& iv, unsigned char c) const;

    /// All supermaximal exact matches of `pattern` covering position
    /// `start`, ascending by pattern_start.
    std::vector<Smem> smems(std::string_view pattern, std::size_t start) const;

  private:
    static FmIndex build(std::string_view text, std::size_t sampling_rate, SuffixArray& sa_out,
                         std::size_t& len_out);
    static unsigned char check_symbol(unsigned char c, std::size_t pos);

    // sa_ and text_len_ are filled by build() and must precede fm_.
    SuffixArray sa_;
    std::size_t text_len_ = 0;
    FmIndex fm_;
};

}  // namespace strand

#endif  // STRAND_FM_INDEX_HPP
