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

#include "strand/rank_select.hpp"

#include <algorithm>
#include <bit>

namespace strand {

RankSelect::RankSelect(const std::vector<bool>& bits, std::size_t block_size)
    : m_(bits.size()), k_(block_size) {
    if (block_size < 1) throw OutOfBounds("block size must be at least 1");
    words_.assign((m_ + 63) / 64, 0);
    for (std::size_t i = 0; i < m_; ++i)
        if (bits[i]) words_[i >> 6] |= std::uint64_t{1} << (i & 63);

    super_.assign(m_ / k_ + 1, 0);
    std::size_t count = 0;
    std::size_t next_boundary = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i <= m_; ++i) {
        if (i == next_boundary && j < super_.size()) {
            super_[j++] = count;
            next_boundary += k_;
        }
        if (i < m_ && ((words_[i >> 6] >> (i & 63)) & 1)) ++count;
    }
    ones_ = count;
}

std::size_t RankSelect::popcount_range(std::size_t lo, std::size_t hi) const {
    std::size_t count = 0;
    std::size_t w = lo >> 6;
    const std::size_t w_last = hi ? (hi - 1) >> 6 : 0;
    if (lo >= hi) return 0;
    for (; w <= w_last; ++w) {
        std::uint64_t word = words_[w];
        if (w == lo >> 6) word &= ~std::uint64_t{0} << (lo & 63);
        std::size_t end_bit = (w + 1) * 64;
        if (end_bit > hi) word &= ~std::uint64_t{0} >> (end_bit - hi);
        count += std::popcount(word);
    }
    return count;
}

std::size_t RankSelect::rank1(std::size_t i) const {
    check_index(i);
    std::size_t pos = i + 1;  // exclusive prefix length
    std::size_t sb = pos / k_;
    if (sb >= super_.size()) sb = super_.size() - 1;
    return super_[sb] + popcount_range(sb * k_, pos);
}

std::size_t RankSelect::select1(std::size_t j) const {
    if (j == 0) throw OutOfBounds("select is 1-based");
    if (j > ones_)
        throw NotEnoughBits("asked for set bit " + std::to_string(j) + " of " +
                            std::to_string(ones_));
    // Last superblock whose prefix count is still below j.
    std::size_t lo = 0, hi = super_.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi + 1) / 2;
        if (super_[mid] < j)
            lo = mid;
        else
            hi = mid - 1;
    }
    std::size_t need = j - super_[lo];
    for (std::size_t i = lo * k_; i < m_; ++i) {
        if ((words_[i >> 6] >> (i & 63)) & 1) {
            if (--need == 0) return i;
        }
    }
    throw InternalConsistencyError("select1 scan overran the bit sequence");
}

std::size_t RankSelect::select0(std::size_t j) const {
    if (j == 0) throw OutOfBounds("select is 1-based");
    if (j > zeros())
        throw NotEnoughBits("asked for unset bit " + std::to_string(j) + " of " +
                            std::to_string(zeros()));
    // zeros before boundary t*k = t*k - super_[t], monotone in t
    std::size_t lo = 0, hi = super_.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi + 1) / 2;
        if (mid * k_ - super_[mid] < j)
            lo = mid;
        else
            hi = mid - 1;
    }
    std::size_t need = j - (lo * k_ - super_[lo]);
    for (std::size_t i = lo * k_; i < m_; ++i) {
        if (!((words_[i >> 6] >> (i & 63)) & 1)) {
            if (--need == 0) return i;
        }
    }
    throw InternalConsistencyError("select0 scan overran the bit sequence");
}

}  // namespace strand
