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

#ifndef STRAND_QGRAM_INDEX_HPP
#define STRAND_QGRAM_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "strand/alphabet.hpp"
#include "strand/error.hpp"

namespace strand {

/// Position index over all q-grams of a text, counting-sort construction.
///
/// Dense bucket table of one slot per bit-packed q-gram code, so
/// q * bits_per_symbol must stay within one 64-bit word, and the table
/// size 2^(q*bits) is bounded by max_buckets.
class QGramIndex {
  public:
    static constexpr std::size_t kDefaultMaxBuckets = std::size_t{1} << 27;

    QGramIndex(std::string_view text, unsigned q, const RankTransform& t,
               std::size_t max_buckets = kDefaultMaxBuckets);

    unsigned q() const noexcept { return q_; }
    const RankTransform& transform() const noexcept { return t_; }
    /// Total number of indexed q-grams: max(0, n - q + 1).
    std::size_t qgram_count() const noexcept { return positions_.size(); }

    /// All start positions of `qgram` in the text, ascending.
    std::vector<std::size_t> matches(std::string_view qgram) const;

  private:
    unsigned q_;
    RankTransform t_;
    std::vector<std::size_t> buckets_;  // prefix sums, one slot per code
    std::vector<std::size_t> positions_;
};

}  // namespace strand

#endif  // STRAND_QGRAM_INDEX_HPP
