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

#ifndef STRAND_SUFFIX_ARRAY_HPP
#define STRAND_SUFFIX_ARRAY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "strand/alphabet.hpp"
#include "strand/error.hpp"

namespace strand {

using SuffixArray = std::vector<std::size_t>;

namespace detail {

/// Suffix array by induced sorting over an integer string whose last
/// symbol is the unique minimum. `sigma` bounds the symbol values.
std::vector<std::size_t> sais(const std::vector<std::uint32_t>& s, std::size_t sigma);

}  // namespace detail

/// Suffix array of a sentinel-terminated text, O(n) construction.
///
/// The sentinel must terminate the text, occur nowhere else, and be
/// strictly smaller than every other byte present.
SuffixArray suffix_array(std::string_view text, char sentinel = '$');

/// Burrows-Wheeler transform: bwt[i] = text[(sa[i] + n - 1) mod n].
std::string bwt(std::string_view text, const SuffixArray& sa);

/// Reconstruct the text from its transform by walking the LF-mapping.
std::string invert_bwt(std::string_view b, char sentinel = '$');

/// Cumulative symbol counts: less[c] = number of bytes strictly smaller
/// than c in the transform.
class LessTable {
  public:
    LessTable() = default;
    LessTable(std::string_view b, const Alphabet& a, char sentinel = '$');

    std::size_t operator[](unsigned char c) const noexcept { return less_[c]; }

  private:
    std::array<std::size_t, 256> less_{};
};

/// Sampled occurrence counts over a Burrows-Wheeler transform.
///
/// Checkpoints hold per-symbol counts for every sampling_rate-th prefix;
/// a query adds a scan of fewer than sampling_rate transform bytes.
/// occ(r, c) counts bytes equal to c in positions 0..=r.
class OccTable {
  public:
    OccTable(std::string b, std::size_t sampling_rate, const Alphabet& a, char sentinel = '$');

    std::size_t sampling_rate() const noexcept { return k_; }
    std::string_view bwt() const noexcept { return bwt_; }
    std::size_t size() const noexcept { return bwt_.size(); }

    /// Count of c in bwt[0..=r]; r = -1 yields 0.
    std::size_t occ(std::ptrdiff_t r, unsigned char c) const;

  private:
    std::string bwt_;
    std::size_t k_ = 1;
    std::array<std::int16_t, 256> slot_{};
    std::size_t nsym_ = 0;
    std::vector<std::size_t> cp_;
};

}  // namespace strand

#endif  // STRAND_SUFFIX_ARRAY_HPP
