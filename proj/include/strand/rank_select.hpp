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

#ifndef STRAND_RANK_SELECT_HPP
#define STRAND_RANK_SELECT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "strand/error.hpp"

namespace strand {

/// Rank and select over an immutable bit sequence.
///
/// One level of superblock counters every `block_size` bits plus word
/// popcounts inside a block. rank is O(block_size / 64); select is a binary
/// search over superblocks followed by an in-block scan.
class RankSelect {
  public:
    explicit RankSelect(const std::vector<bool>& bits, std::size_t block_size = 512);

    std::size_t size() const noexcept { return m_; }
    std::size_t block_size() const noexcept { return k_; }
    std::size_t ones() const noexcept { return ones_; }
    std::size_t zeros() const noexcept { return m_ - ones_; }

    bool bit(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    /// Set bits in positions 0..=i.
    std::size_t rank1(std::size_t i) const;
    /// Unset bits in positions 0..=i.
    std::size_t rank0(std::size_t i) const { return i + 1 - rank1(i); }

    /// Position of the j-th set bit, 1-based j.
    std::size_t select1(std::size_t j) const;
    /// Position of the j-th unset bit, 1-based j.
    std::size_t select0(std::size_t j) const;

  private:
    void check_index(std::size_t i) const {
        if (i >= m_)
            throw OutOfBounds("bit index " + std::to_string(i) + " out of range (size " +
                              std::to_string(m_) + ")");
    }

    std::size_t popcount_range(std::size_t lo, std::size_t hi) const;

    std::vector<std::uint64_t> words_;
    std::vector<std::size_t> super_;  // super_[j] = set bits in [0, j*k)
    std::size_t m_ = 0;
    std::size_t k_ = 0;
    std::size_t ones_ = 0;
};

}  // namespace strand

#endif  // STRAND_RANK_SELECT_HPP
